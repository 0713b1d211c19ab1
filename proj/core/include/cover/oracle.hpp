#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "cover/geometry.hpp"

namespace cover {

class DomainError : public Error {
public:
  using Error::Error;
};

/// Central differences of G, step h in region units.
Eigen::VectorXd fd_gradient(const Region& region, const Configuration& cfg, double h = 1e-6);

/// Central differences of the analytic gradient, symmetrized.
Eigen::MatrixXd fd_hessian(const Region& region, const Configuration& cfg, double h = 1e-6);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

/// Covered area Vol(A cap Omega) by uniform sampling, stratified per polygon
/// in proportion to area.
MonteCarloEstimate mc_area(const Region& region, const Configuration& cfg, std::int64_t samples, std::uint64_t seed);

/// Area of the intersection of two disks of radius r at distance d.
double lens_area(double r, double d);

/// Closed form ((pi - sqrt3)/2) s^2 with r0 = side/sqrt3 and
/// s = sqrt(r^2 - 3 r0^2 / 4) - 3 r0 / 2 + r.
double reuleaux_area(double r, double side);

/// Random configuration that passes screen_nondegenerate: centers uniform on
/// A, radius sqrt(Vol(A) / (pi m)) times a factor in [0.5, 1.5). Draw `index`
/// of `seed` is reproducible. Throws Error after `attempts` rejections.
Configuration random_screened_config(const Region& region, int m, std::uint64_t seed, std::uint64_t index,
                                     int attempts = 1000);

/// Exact area common to three disks of radius r centered at the corners of an
/// equilateral triangle with the given side (side/sqrt3 <= r <= side).
double triple_disk_area(double r, double side);

}  // namespace cover
