#pragma once

#include "cover/geometry.hpp"

namespace cover {

/// Distances of a configuration from the situations where G stops being
/// twice differentiable. Length margins are compared with Region::eps_deg(),
/// angular ones (dimensionless) with 1e-9.
struct DiagnosticsReport {
  double min_center_distance = std::numeric_limits<double>::infinity();
  /// min over pairs of | |x_i - x_l| - 2r |.
  double min_tangency_margin = std::numeric_limits<double>::infinity();
  /// min over arc endpoints of |tau_i . nu_other|.
  double min_transversality = std::numeric_limits<double>::infinity();
  /// min over balls and boundary edges of | dist(x_i, edge) - r |.
  double min_boundary_margin = std::numeric_limits<double>::infinity();
  /// Points of A where three or more circles nearly meet.
  int near_triple = 0;
  /// Arc endpoints on a corner of A, or on A's boundary and another circle.
  int corner_contacts = 0;
  bool ok = true;
};

inline constexpr double kAngularMargin = 1e-9;

DiagnosticsReport screen_nondegenerate(const Region& region, const Configuration& cfg);

}  // namespace cover
