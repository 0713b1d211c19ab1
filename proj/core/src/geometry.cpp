#include "cover/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "cover/clip.hpp"

namespace cover {

double polar_angle(Point2 v) {
  double t = std::atan2(v.y, v.x);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  if (t >= 2.0 * std::numbers::pi) t -= 2.0 * std::numbers::pi;
  return t;
}

void BoundingBox::extend(Point2 p) {
  lo.x = std::min(lo.x, p.x);
  lo.y = std::min(lo.y, p.y);
  hi.x = std::max(hi.x, p.x);
  hi.y = std::max(hi.y, p.y);
}

BoundingBox BoundingBox::inflated(double margin) const {
  BoundingBox b = *this;
  b.lo = b.lo - Point2{margin, margin};
  b.hi = b.hi + Point2{margin, margin};
  return b;
}

double signed_area(std::span<const Point2> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) return 0.0;
  // Shift to the first vertex to limit cancellation.
  const Point2 o = cycle[0];
  double s = 0.0;
  for (std::size_t k = 1; k + 1 < n; ++k) s += cross(cycle[k] - o, cycle[k + 1] - o);
  return 0.5 * s;
}

namespace {

std::string describe(std::span<const Point2> vs) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (std::size_t k = 0; k < vs.size(); ++k) os << (k ? ", " : "") << "(" << vs[k].x << "," << vs[k].y << ")";
  os << "]";
  return os.str();
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) {
  for (const Point2& p : vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidInput("polygon has a non-finite coordinate");
  }
  BoundingBox box;
  for (const Point2& p : vertices) box.extend(p);
  const double scale = std::max(box.diameter(), 1e-300);
  const double dup_tol = 1e-14 * scale;

  std::vector<Point2> clean;
  clean.reserve(vertices.size());
  for (const Point2& p : vertices) {
    if (clean.empty() || distance(clean.back(), p) > dup_tol) clean.push_back(p);
  }
  while (clean.size() > 1 && distance(clean.front(), clean.back()) <= dup_tol) clean.pop_back();

  if (clean.size() < 3) throw InvalidInput("polygon needs at least 3 distinct vertices: " + describe(vertices));
  if (signed_area(clean) <= 0.0) throw InvalidInput("polygon is not counter-clockwise: " + describe(vertices));
  const std::size_t n = clean.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point2 a = clean[(k + n - 1) % n];
    const Point2 b = clean[k];
    const Point2 c = clean[(k + 1) % n];
    if (cross(b - a, c - b) < -1e-12 * scale * scale) throw InvalidInput("polygon is not convex: " + describe(vertices));
  }
  vertices_ = std::move(clean);
}

ConvexPolygon ConvexPolygon::unchecked(std::vector<Point2> vertices) {
  ConvexPolygon p;
  p.vertices_ = std::move(vertices);
  return p;
}

double ConvexPolygon::area() const { return signed_area(vertices_); }

BoundingBox ConvexPolygon::bounds() const {
  BoundingBox b;
  for (const Point2& p : vertices_) b.extend(p);
  return b;
}

Point2 ConvexPolygon::edge_normal(std::size_t k) const {
  const Point2 d = next(k) - vertices_[k];
  return Point2{d.y, -d.x} / norm(d);
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (dot(p - vertices_[k], edge_normal(k)) > tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Region::Region(std::vector<ConvexPolygon> polygons) : polygons_(std::move(polygons)) { finish(true); }

Region::Region(std::vector<ConvexPolygon> polygons, std::vector<std::vector<bool>> boundary_flags)
    : polygons_(std::move(polygons)), flags_(std::move(boundary_flags)) {
  if (flags_.size() != polygons_.size()) throw InvalidInput("boundary_flags must have one list per polygon");
  for (std::size_t j = 0; j < polygons_.size(); ++j) {
    if (flags_[j].size() != polygons_[j].size()) {
      throw InvalidInput("boundary_flags[" + std::to_string(j) + "] must have one flag per edge");
    }
  }
  finish(false);
}

void Region::finish(bool detect_twins) {
  if (polygons_.empty()) throw InvalidInput("region needs at least one polygon");
  bounds_ = BoundingBox{};
  volume_ = 0.0;
  for (const auto& p : polygons_) {
    for (const Point2& v : p.vertices()) bounds_.extend(v);
    volume_ += p.area();
  }
  const double tol = std::max(eps_geo(), 1e-300);
  const std::size_t np = polygons_.size();

  auto has_twin = [&](std::size_t j, std::size_t k) {
    const Point2 a = polygons_[j][k];
    const Point2 b = polygons_[j].next(k);
    for (std::size_t j2 = 0; j2 < np; ++j2) {
      if (j2 == j) continue;
      const auto& q = polygons_[j2];
      for (std::size_t k2 = 0; k2 < q.size(); ++k2) {
        if (distance(q[k2], b) <= tol && distance(q.next(k2), a) <= tol) return true;
      }
    }
    return false;
  };

  if (detect_twins) {
    flags_.assign(np, {});
    for (std::size_t j = 0; j < np; ++j) {
      flags_[j].resize(polygons_[j].size());
      for (std::size_t k = 0; k < polygons_[j].size(); ++k) flags_[j][k] = !has_twin(j, k);
    }
  } else {
    for (std::size_t j = 0; j < np; ++j) {
      for (std::size_t k = 0; k < polygons_[j].size(); ++k) {
        if (!flags_[j][k] && !has_twin(j, k)) {
          throw InvalidInput("edge " + std::to_string(k) + " of polygon " + std::to_string(j) +
                             " is flagged interior but has no reversed twin");
        }
      }
    }
  }

  // Interiors must be pairwise disjoint.
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t j2 = j + 1; j2 < np; ++j2) {
      if (!polygons_[j].bounds().overlaps(polygons_[j2].bounds())) continue;
      const double shared = intersection_area(polygons_[j], polygons_[j2]);
      if (shared > 1e-10 * std::min(polygons_[j].area(), polygons_[j2].area())) {
        throw InvalidInput("polygons " + std::to_string(j) + " and " + std::to_string(j2) + " overlap");
      }
    }
  }

  vertex_flags_.assign(np, {});
  std::vector<Point2> boundary_vertices;
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t k = 0; k < polygons_[j].size(); ++k) {
      if (flags_[j][k]) {
        boundary_vertices.push_back(polygons_[j][k]);
        boundary_vertices.push_back(polygons_[j].next(k));
      }
    }
  }
  for (std::size_t j = 0; j < np; ++j) {
    vertex_flags_[j].resize(polygons_[j].size());
    for (std::size_t k = 0; k < polygons_[j].size(); ++k) {
      const Point2 v = polygons_[j][k];
      vertex_flags_[j][k] = std::any_of(boundary_vertices.begin(), boundary_vertices.end(),
                                        [&](Point2 b) { return distance(b, v) <= tol; });
    }
  }
}

bool Region::contains(Point2 p) const {
  return std::any_of(polygons_.begin(), polygons_.end(), [&](const ConvexPolygon& q) { return q.contains(p); });
}

double region_volume(const Region& region) {
  double v = 0.0;
  for (const auto& p : region.polygons()) v += p.area();
  return v;
}

// ---------------------------------------------------------------------------

Eigen::VectorXd Configuration::packed() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(dimension()));
  for (std::size_t i = 0; i < centers.size(); ++i) {
    v[static_cast<Eigen::Index>(2 * i)] = centers[i].x;
    v[static_cast<Eigen::Index>(2 * i + 1)] = centers[i].y;
  }
  v[v.size() - 1] = radius;
  return v;
}

Configuration Configuration::unpack(const Eigen::VectorXd& v) {
  if (v.size() < 3 || v.size() % 2 == 0) throw InvalidInput("packed configuration must have odd length >= 3");
  Configuration c;
  const auto m = static_cast<std::size_t>((v.size() - 1) / 2);
  c.centers.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    c.centers[i] = {v[static_cast<Eigen::Index>(2 * i)], v[static_cast<Eigen::Index>(2 * i + 1)]};
  }
  c.radius = v[v.size() - 1];
  return c;
}

void Configuration::validate() const {
  if (centers.empty()) throw InvalidInput("configuration needs at least one ball");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("radius must be positive and finite");
  for (const Point2& c : centers) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y)) throw InvalidInput("center has a non-finite coordinate");
  }
}

}  // namespace cover
