#include "cover/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cover {

HalfPlane bisector(Point2 xi, Point2 xl, int l) {
  const Point2 d = xi - xl;
  return HalfPlane{0.5 * (xi + xl), d / norm(d), l};
}

std::vector<HalfPlane> bisector_halfplanes(std::span<const Point2> centers, std::size_t i) {
  BoundingBox box;
  for (const Point2& c : centers) box.extend(c);
  const double tol = 1e-12 * std::max(box.diameter(), 1.0);
  std::vector<HalfPlane> out;
  out.reserve(centers.size());
  for (std::size_t l = 0; l < centers.size(); ++l) {
    if (l == i) continue;
    if (distance(centers[i], centers[l]) <= tol) {
      throw DuplicateCenters("centers " + std::to_string(i) + " and " + std::to_string(l) + " coincide");
    }
    out.push_back(bisector(centers[i], centers[l], static_cast<int>(l)));
  }
  return out;
}

namespace {

TaggedPolygon frame_polygon(const BoundingBox& f) {
  TaggedPolygon t;
  t.vertices = {f.lo, {f.hi.x, f.lo.y}, f.hi, {f.lo.x, f.hi.y}};
  t.tags.assign(4, EdgeTag::frame());
  return t;
}

struct BucketGrid {
  Point2 origin;
  double h = 1.0;
  int nx = 1, ny = 1;
  std::vector<std::vector<int>> buckets;

  BucketGrid(std::span<const Point2> pts) {
    BoundingBox box;
    for (const Point2& p : pts) box.extend(p);
    const double w = box.hi.x - box.lo.x;
    const double hh = box.hi.y - box.lo.y;
    const double m = static_cast<double>(std::max<std::size_t>(pts.size(), 1));
    h = std::max({std::sqrt(w * hh / m), std::max(w, hh) / m, 1e-300});
    origin = box.lo;
    nx = static_cast<int>(std::min(w / h, 1e6)) + 1;
    ny = static_cast<int>(std::min(hh / h, 1e6)) + 1;
    buckets.resize(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      auto [cx, cy] = locate(pts[k]);
      buckets[index(cx, cy)].push_back(static_cast<int>(k));
    }
  }

  std::pair<int, int> locate(Point2 p) const {
    const int cx = std::clamp(static_cast<int>((p.x - origin.x) / h), 0, nx - 1);
    const int cy = std::clamp(static_cast<int>((p.y - origin.y) / h), 0, ny - 1);
    return {cx, cy};
  }
  std::size_t index(int cx, int cy) const {
    return static_cast<std::size_t>(cy) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(cx);
  }
};

}  // namespace

VoronoiCells::VoronoiCells(std::span<const Point2> centers, const BoundingBox& frame, double tol) {
  const std::size_t m = centers.size();
  cells_.resize(m);
  planes_.resize(m);
  if (m == 0) return;

  const BucketGrid grid(centers);
  const int max_ring = std::max(grid.nx, grid.ny);

  for (std::size_t i = 0; i < m; ++i) {
    const Point2 xi = centers[i];
    TaggedPolygon cell = frame_polygon(frame);
    std::vector<HalfPlane> tried;
    bool lost = false;
    auto [cx, cy] = grid.locate(xi);

    auto visit = [&](int bx, int by) {
      if (bx < 0 || by < 0 || bx >= grid.nx || by >= grid.ny) return;
      for (int l : grid.buckets[grid.index(bx, by)]) {
        if (static_cast<std::size_t>(l) == i) continue;
        if (distance(centers[static_cast<std::size_t>(l)], xi) <= tol) {
          if (static_cast<std::size_t>(l) < i) lost = true;
          continue;
        }
        if (cell.empty() || lost) continue;
        const HalfPlane hp = bisector(xi, centers[static_cast<std::size_t>(l)], l);
        const TaggedPolygon clipped = clip_tagged(cell, hp, EdgeTag::bisector(l));
        if (clipped.vertices.size() != cell.vertices.size() || clipped.tags != cell.tags) tried.push_back(hp);
        cell = clipped;
      }
    };

    for (int ring = 0; ring <= max_ring && !lost; ++ring) {
      if (ring == 0) {
        visit(cx, cy);
      } else {
        for (int d = -ring; d <= ring; ++d) {
          visit(cx + d, cy - ring);
          visit(cx + d, cy + ring);
        }
        for (int d = -ring + 1; d <= ring - 1; ++d) {
          visit(cx - ring, cy + d);
          visit(cx + ring, cy + d);
        }
      }
      if (cell.empty()) break;
      double reach = 0.0;
      for (const Point2& v : cell.vertices) reach = std::max(reach, distance(v, xi));
      if (2.0 * reach <= static_cast<double>(ring) * grid.h) break;
    }

    if (lost) {
      ++coincident_;
      cell = TaggedPolygon{};
    }
    for (const EdgeTag& t : cell.tags) {
      if (t.kind != EdgeTag::Kind::Bisector) continue;
      auto it = std::find_if(tried.begin(), tried.end(), [&](const HalfPlane& h) { return h.neighbor == t.index; });
      if (it != tried.end() &&
          std::none_of(planes_[i].begin(), planes_[i].end(), [&](const HalfPlane& h) { return h.neighbor == t.index; })) {
        planes_[i].push_back(*it);
      }
    }
    cells_[i] = std::move(cell);
  }
}

}  // namespace cover
