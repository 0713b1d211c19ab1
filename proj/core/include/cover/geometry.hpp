#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace cover {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polygon, region, or configuration input.
class InvalidInput : public Error {
public:
  using Error::Error;
};

class DuplicateCenters : public Error {
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Points
// ---------------------------------------------------------------------------

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
constexpr double norm2(Point2 a) { return a.x * a.x + a.y * a.y; }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Angle of `v` in [0, 2*pi).
double polar_angle(Point2 v);

/// Unit vector (cos t, sin t).
inline Point2 unit(double t) { return {std::cos(t), std::sin(t)}; }

struct BoundingBox {
  Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

  void extend(Point2 p);
  bool empty() const { return lo.x > hi.x; }
  double diameter() const { return empty() ? 0.0 : distance(lo, hi); }
  bool overlaps(const BoundingBox& o) const {
    return !(o.lo.x > hi.x || o.hi.x < lo.x || o.lo.y > hi.y || o.hi.y < lo.y);
  }
  BoundingBox inflated(double margin) const;
};

// ---------------------------------------------------------------------------
// Half-planes and convex polygons
// ---------------------------------------------------------------------------

/// Closed half-plane { y : (y - point) . normal >= 0 }; `normal` is unit length
/// and points into the half-plane. `neighbor` is the competing center index for
/// Voronoi bisectors, or -1.
struct HalfPlane {
  Point2 point;
  Point2 normal;
  int neighbor = -1;

  double signed_distance(Point2 y) const { return dot(y - point, normal); }
};

/// Convex polygon with counter-clockwise vertices.
class ConvexPolygon {
public:
  ConvexPolygon() = default;

  /// Validates: >= 3 distinct vertices, counter-clockwise, convex, positive
  /// area. Consecutive duplicates (including a repeated closing vertex) are
  /// dropped. Throws InvalidInput.
  explicit ConvexPolygon(std::vector<Point2> vertices);

  /// Wraps vertices produced by clipping; no validation.
  static ConvexPolygon unchecked(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t k) const { return vertices_[k]; }
  const Point2& next(std::size_t k) const { return vertices_[(k + 1) % vertices_.size()]; }

  /// Shoelace area.
  double area() const;
  BoundingBox bounds() const;
  /// Outward unit normal of edge k (vertex k to vertex k+1).
  Point2 edge_normal(std::size_t k) const;
  bool contains(Point2 p, double tol = 0.0) const;

private:
  std::vector<Point2> vertices_;
};

/// Shoelace area of a closed vertex cycle (signed, positive when CCW).
double signed_area(std::span<const Point2> cycle);

// ---------------------------------------------------------------------------
// Region
// ---------------------------------------------------------------------------

/// Union of non-overlapping convex polygons with per-edge boundary flags.
/// boundary_flags()[j][k] is true when edge k of polygon j lies on the
/// boundary of the union, false when it is shared with a sibling polygon.
class Region {
public:
  Region() = default;

  /// Detects interior edges by reversed-twin endpoint coincidence.
  explicit Region(std::vector<ConvexPolygon> polygons);

  /// Uses caller-supplied flags; every edge flagged interior must still have a
  /// reversed twin. Throws InvalidInput on mismatch.
  Region(std::vector<ConvexPolygon> polygons, std::vector<std::vector<bool>> boundary_flags);

  const std::vector<ConvexPolygon>& polygons() const { return polygons_; }
  const ConvexPolygon& polygon(std::size_t j) const { return polygons_[j]; }
  std::size_t size() const { return polygons_.size(); }
  const std::vector<std::vector<bool>>& boundary_flags() const { return flags_; }
  bool edge_on_boundary(std::size_t j, std::size_t k) const { return flags_[j][k]; }
  /// True when vertex k of polygon j is an endpoint of some boundary edge.
  bool vertex_on_boundary(std::size_t j, std::size_t k) const { return vertex_flags_[j][k]; }

  double volume() const { return volume_; }
  const BoundingBox& bounds() const { return bounds_; }
  double diameter() const { return bounds_.diameter(); }

  /// Point-classification tolerance, 1e-12 x diameter.
  double eps_geo() const { return 1e-12 * diameter(); }
  /// Degeneracy-screening tolerance, 1e-9 x diameter.
  double eps_deg() const { return 1e-9 * diameter(); }

  bool contains(Point2 p) const;

private:
  void finish(bool detect_twins);

  std::vector<ConvexPolygon> polygons_;
  std::vector<std::vector<bool>> flags_;
  std::vector<std::vector<bool>> vertex_flags_;
  double volume_ = 0.0;
  BoundingBox bounds_;
};

/// Sum of polygon areas.
double region_volume(const Region& region);

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

/// Ball centers and common radius. Packed variable order is
/// (x_1.x, x_1.y, ..., x_m.x, x_m.y, r).
struct Configuration {
  std::vector<Point2> centers;
  double radius = 1.0;

  std::size_t size() const { return centers.size(); }
  std::size_t dimension() const { return 2 * centers.size() + 1; }

  Eigen::VectorXd packed() const;
  static Configuration unpack(const Eigen::VectorXd& v);
  /// Throws InvalidInput unless m >= 1, r > 0, all coordinates finite.
  void validate() const;
};

}  // namespace cover
