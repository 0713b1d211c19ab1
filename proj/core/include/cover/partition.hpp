#pragma once

#include <utility>
#include <vector>

#include "cover/clip.hpp"
#include "cover/geometry.hpp"

namespace cover {

/// Maximal arc of circle i on the boundary of the covered set inside A, from
/// angle theta_v counter-clockwise to theta_w.
struct Arc {
  Point2 v, w;
  double theta_v = 0.0;  // in [0, 2*pi)
  double theta_w = 0.0;  // in (theta_v, theta_v + 2*pi]
  VertexAnnotation ann_v, ann_w;

  double span() const { return theta_w - theta_v; }
};

struct BallBook {
  std::vector<Arc> arcs;
  /// Whole circle lies in A and outside every other ball; arcs is empty then.
  bool circle = false;
  /// Straight pieces (v, w) of every S_ij of this ball.
  std::vector<std::pair<Point2, Point2>> edges;
  /// Polygons j with a nonempty piece S_ij.
  std::vector<int> polygons;
};

/// Per-ball arc and edge sets: everything the evaluation of G and its
/// derivatives needs.
struct ArcBook {
  std::vector<BallBook> balls;
  /// Nonempty pieces (i, j).
  std::vector<std::pair<int, int>> pieces;
  /// For each polygon j, the balls i with a nonempty S_ij.
  std::vector<std::vector<int>> balls_of_polygon;

  std::size_t size() const { return balls.size(); }
};

/// Counts of geometric situations where the derivative formulas do not apply.
struct DegeneracyFlags {
  int coincident_centers = 0;
  int corner_contacts = 0;    // arc endpoint on a vertex of the boundary of A
  int mixed_endpoints = 0;    // endpoint on the boundary of A and on another circle
  int unmatched_merges = 0;   // interior-edge arc endpoint without a continuation

  bool any() const { return coincident_centers + corner_contacts + mixed_endpoints + unmatched_merges > 0; }
};

struct Partition {
  std::vector<CurvilinearPolygon> pieces;
  ArcBook book;
  DegeneracyFlags flags;
};

/// Splits A cap Omega(x, r) into the pieces A_j cap V_i cap B(x_i, r), annotates
/// every arc endpoint, and merges arcs across interior polygon edges.
Partition build_partition(const Region& region, const Configuration& cfg);

/// Voronoi cells cap A_j without the balls (the W_ij), for drawing.
std::vector<TaggedPolygon> restricted_cells(const Region& region, const Configuration& cfg);

}  // namespace cover
