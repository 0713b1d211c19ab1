#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "cover/cover.hpp"

namespace cover::testing {

inline constexpr double kPi = std::numbers::pi;

inline ConvexPolygon rect(double x0, double y0, double x1, double y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

inline Region square_region(double side) { return Region({rect(0, 0, side, side)}); }

/// [0,1]^2 and [1,2]x[0,1] sharing the edge x = 1.
inline Region two_squares() { return Region({rect(0, 0, 1, 1), rect(1, 0, 2, 1)}); }

inline double piece_area_sum(const Partition& p) {
  double s = 0.0;
  for (const CurvilinearPolygon& piece : p.pieces) s += piece.area();
  return s;
}

inline Point2 rotate(Point2 p, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

template <class Map>
Region map_region(const Region& region, Map f) {
  std::vector<ConvexPolygon> polys;
  for (const ConvexPolygon& poly : region.polygons()) {
    std::vector<Point2> v;
    for (const Point2& p : poly.vertices()) v.push_back(f(p));
    polys.emplace_back(std::move(v));
  }
  return Region(std::move(polys), region.boundary_flags());
}

template <class Map>
Configuration map_config(const Configuration& cfg, Map f, double radius_scale = 1.0) {
  Configuration out;
  for (const Point2& c : cfg.centers) out.centers.push_back(f(c));
  out.radius = cfg.radius * radius_scale;
  return out;
}

}  // namespace cover::testing
