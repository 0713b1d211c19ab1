#include "cover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cover/covering.hpp"
#include "cover/rng.hpp"
#include "cover/screening.hpp"

namespace cover {

Eigen::VectorXd fd_gradient(const Region& region, const Configuration& cfg, double h) {
  const Eigen::VectorXd x = cfg.packed();
  Eigen::VectorXd g(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    const double gp = evaluate(region, Configuration::unpack(xp), Order::Value).g;
    const double gm = evaluate(region, Configuration::unpack(xm), Order::Value).g;
    g[k] = (gp - gm) / (2.0 * h);
  }
  return g;
}

Eigen::MatrixXd fd_hessian(const Region& region, const Configuration& cfg, double h) {
  const Eigen::VectorXd x = cfg.packed();
  const Eigen::Index n = x.size();
  Eigen::MatrixXd H(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    const Eigen::VectorXd gp = evaluate(region, Configuration::unpack(xp), Order::Gradient).grad;
    const Eigen::VectorXd gm = evaluate(region, Configuration::unpack(xm), Order::Gradient).grad;
    H.col(k) = (gp - gm) / (2.0 * h);
  }
  return 0.5 * (H + H.transpose());
}

namespace {

struct Fan {
  std::vector<Point2> a, b, c;
  std::vector<double> cumulative;
};

Fan triangulate(const ConvexPolygon& poly) {
  Fan f;
  double acc = 0.0;
  for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
    f.a.push_back(poly[0]);
    f.b.push_back(poly[k]);
    f.c.push_back(poly[k + 1]);
    acc += 0.5 * cross(poly[k] - poly[0], poly[k + 1] - poly[0]);
    f.cumulative.push_back(acc);
  }
  return f;
}

Point2 sample(const Fan& f, SplitMix64& rng) {
  const double pick = rng.uniform() * f.cumulative.back();
  const auto t = static_cast<std::size_t>(
      std::min<std::ptrdiff_t>(std::upper_bound(f.cumulative.begin(), f.cumulative.end(), pick) - f.cumulative.begin(),
                               static_cast<std::ptrdiff_t>(f.cumulative.size()) - 1));
  double u = rng.uniform(), v = rng.uniform();
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return f.a[t] + u * (f.b[t] - f.a[t]) + v * (f.c[t] - f.a[t]);
}

}  // namespace

MonteCarloEstimate mc_area(const Region& region, const Configuration& cfg, std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("mc_area needs at least one sample");
  const double r2 = cfg.radius * cfg.radius;
  const double vol = region.volume();
  MonteCarloEstimate out;
  double var = 0.0;
  for (std::size_t j = 0; j < region.size(); ++j) {
    const ConvexPolygon& poly = region.polygon(j);
    const double area = poly.area();
    const auto n = std::max<std::int64_t>(1, std::llround(static_cast<double>(samples) * area / vol));
    const Fan fan = triangulate(poly);
    SplitMix64 rng = SplitMix64::stream(seed, j);
    std::int64_t hits = 0;
    for (std::int64_t s = 0; s < n; ++s) {
      const Point2 z = sample(fan, rng);
      for (const Point2& c : cfg.centers) {
        if (norm2(z - c) <= r2) {
          ++hits;
          break;
        }
      }
    }
    const double p = static_cast<double>(hits) / static_cast<double>(n);
    out.estimate += area * p;
    var += area * area * p * (1.0 - p) / static_cast<double>(n);
  }
  out.stderr_ = std::sqrt(var);
  return out;
}

Configuration random_screened_config(const Region& region, int m, std::uint64_t seed, std::uint64_t index,
                                     int attempts) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  SplitMix64 rng = SplitMix64::stream(seed, index);
  const BoundingBox& box = region.bounds();
  const Point2 span = box.hi - box.lo;
  const double base = std::sqrt(region.volume() / (std::numbers::pi * m));
  for (int a = 0; a < attempts; ++a) {
    Configuration cfg;
    while (static_cast<int>(cfg.centers.size()) < m) {
      const Point2 p{box.lo.x + span.x * rng.uniform(), box.lo.y + span.y * rng.uniform()};
      if (region.contains(p)) cfg.centers.push_back(p);
    }
    cfg.radius = base * (0.5 + rng.uniform());
    if (screen_nondegenerate(region, cfg).ok) return cfg;
  }
  throw Error("no non-degenerate configuration found");
}

double lens_area(double r, double d) {
  if (!(r > 0.0) || !(d >= 0.0) || d > 2.0 * r) throw DomainError("lens_area needs r > 0 and 0 <= d <= 2r");
  const double half = 0.5 * d;
  return 2.0 * r * r * std::acos(half / r) - d * std::sqrt(std::max(r * r - half * half, 0.0));
}

double reuleaux_area(double r, double side) {
  const double r0 = side / std::sqrt(3.0);
  if (!(side > 0.0) || r < r0) throw DomainError("reuleaux_area needs side > 0 and r >= side/sqrt(3)");
  const double s = std::sqrt(r * r - 0.75 * r0 * r0) - 1.5 * r0 + r;
  return 0.5 * (std::numbers::pi - std::sqrt(3.0)) * s * s;
}

double triple_disk_area(double r, double side) {
  const double s3 = std::sqrt(3.0);
  if (!(side > 0.0) || r < side / s3) throw DomainError("triple_disk_area needs side > 0 and r >= side/sqrt(3)");
  // Corners of the curved triangle sit on the center lines, at this distance
  // from the centroid.
  const double rho = std::sqrt(std::max(r * r - 0.25 * side * side, 0.0)) - side / (2.0 * s3);
  const double chord = s3 * rho;
  const double angle = 2.0 * std::asin(std::min(chord / (2.0 * r), 1.0));
  return 0.25 * s3 * chord * chord + 1.5 * r * r * (angle - std::sin(angle));
}

}  // namespace cover
