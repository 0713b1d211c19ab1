#pragma once

#include <span>
#include <vector>

#include "cover/clip.hpp"
#include "cover/geometry.hpp"

namespace cover {

/// Half-plane of points at least as close to centers[i] as to centers[l].
HalfPlane bisector(Point2 xi, Point2 xl, int l);

/// Bisector half-planes whose intersection is the Voronoi cell of centers[i]
/// in the whole plane. Returns every competitor (a superset of the minimal
/// set); empty when there is a single center. Throws DuplicateCenters when two
/// centers coincide within 1e-12 x (extent of the centers).
std::vector<HalfPlane> bisector_halfplanes(std::span<const Point2> centers, std::size_t i);

/// Voronoi cells of a set of centers, restricted to a rectangular frame.
///
/// Each cell is grown by clipping the frame with bisectors of neighbors taken
/// in order of increasing distance from a bucket grid, and stops once the next
/// unvisited neighbor is farther than twice the cell's current radius. The
/// result is exact inside the frame. Exactly coincident centers (within `tol`)
/// keep the cell for the lowest index; the others get an empty cell.
class VoronoiCells {
public:
  VoronoiCells(std::span<const Point2> centers, const BoundingBox& frame, double tol);

  std::size_t size() const { return cells_.size(); }
  /// V_i intersected with the frame; edges tagged by bisector neighbor or frame.
  const TaggedPolygon& cell(std::size_t i) const { return cells_[i]; }
  /// Bisectors supporting at least one edge of cell(i).
  const std::vector<HalfPlane>& halfplanes(std::size_t i) const { return planes_[i]; }
  /// Number of centers that lost their cell to an earlier coincident center.
  int coincident() const { return coincident_; }

private:
  std::vector<TaggedPolygon> cells_;
  std::vector<std::vector<HalfPlane>> planes_;
  int coincident_ = 0;
};

}  // namespace cover
