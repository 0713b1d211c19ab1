#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cover/geometry.hpp"

namespace cover {

/// Provenance of a polygon edge after clipping: an edge of a region polygon,
/// a Voronoi bisector, or an artificial frame edge.
struct EdgeTag {
  enum class Kind : std::uint8_t { Polygon, Bisector, Frame };

  Kind kind = Kind::Frame;
  int index = -1;  // polygon j, or competing center l
  int edge = -1;   // edge k of polygon j

  static EdgeTag polygon(int j, int k) { return {Kind::Polygon, j, k}; }
  static EdgeTag bisector(int l) { return {Kind::Bisector, l, -1}; }
  static EdgeTag frame() { return {}; }
  friend bool operator==(const EdgeTag&, const EdgeTag&) = default;
};

/// Convex CCW polygon whose edge k (vertex k to k+1) carries tags[k].
struct TaggedPolygon {
  std::vector<Point2> vertices;
  std::vector<EdgeTag> tags;

  bool empty() const { return vertices.size() < 3; }
  std::size_t size() const { return vertices.size(); }
  double area() const { return signed_area(vertices); }

  static TaggedPolygon from(const ConvexPolygon& poly, int polygon_index);
  ConvexPolygon polygon() const { return ConvexPolygon::unchecked(vertices); }
};

/// Sutherland-Hodgman step: poly intersected with the closed half-plane.
/// Vertices within `tol` of the clip line count as inside. The new edge along
/// the clip line is tagged `tag`. Returns an empty polygon when the
/// intersection has no area.
TaggedPolygon clip_tagged(const TaggedPolygon& poly, const HalfPlane& hp, EdgeTag tag, double tol = 0.0);

/// poly intersected with hp, or nullopt when the intersection has zero area.
std::optional<ConvexPolygon> clip_polygon_halfplane(const ConvexPolygon& poly, const HalfPlane& hp);

/// Area of a intersected with b (both convex).
double intersection_area(const ConvexPolygon& a, const ConvexPolygon& b);

// ---------------------------------------------------------------------------
// Curvilinear polygons
// ---------------------------------------------------------------------------

enum class PieceKind : std::uint8_t { Segment, Arc };

/// Geometric facts about a vertex of a piece that are needed by the
/// second-order formulas. `L` lists the other balls whose circles pass through
/// the vertex; `vartheta[k]` is the angle of (z - x_{L[k]}).
struct VertexAnnotation {
  bool on_boundary_A = false;
  std::optional<Point2> nu_A;
  std::vector<int> L;
  double theta = 0.0;
  std::vector<double> vartheta;

  /// No boundary contact and no other circle: the vertex is an artefact of
  /// the convex decomposition and arcs meeting there get merged.
  bool mergeable() const { return !on_boundary_A && L.empty(); }
};

struct CycleVertex {
  Point2 point;
  PieceKind kind = PieceKind::Segment;  // piece from this vertex to the next
  EdgeTag on_edge;                      // edge of W the vertex lies on
  VertexAnnotation annotation;          // filled for arc endpoints
};

/// Piece S_ij = W_ij cap closed ball(x_i, r) as a CCW cycle of segments and
/// arcs of the ball's circle. A full ball is the single vertex (x, y + r)
/// followed by an arc back to itself.
struct CurvilinearPolygon {
  int ball = -1;
  int polygon = -1;
  Point2 center;
  double radius = 0.0;
  std::vector<CycleVertex> cycle;
  bool is_full_ball = false;

  std::size_t size() const { return cycle.size(); }
  const CycleVertex& next(std::size_t k) const { return cycle[(k + 1) % cycle.size()]; }
  /// Green's-theorem area of the enclosed region.
  double area() const;
};

/// Counter-clockwise angular span from v to w around `center`, in (0, 2*pi].
double arc_span(Point2 center, Point2 v, Point2 w);

/// Exact area contribution of the arc of circle (center, r) from angle
/// theta_v through theta_v + span to the integral of x dy.
double arc_x_dy(Point2 center, double r, double theta_v, double span);

/// Exact contribution of segment [v, w] to the integral of x dy.
inline double segment_x_dy(Point2 v, Point2 w) { return 0.5 * (v.x + w.x) * (w.y - v.y); }

/// Intersection of a convex CCW polygon with the closed ball B(center, r),
/// one pass over the edges with the four inside/outside cases. nullopt when
/// the intersection is empty.
std::optional<CurvilinearPolygon> intersect_polygon_ball(const TaggedPolygon& W, Point2 center, double r);
std::optional<CurvilinearPolygon> intersect_polygon_ball(const ConvexPolygon& W, Point2 center, double r);

}  // namespace cover
