#include "cover/screening.hpp"

#include <algorithm>
#include <cmath>

#include "cover/partition.hpp"

namespace cover {

namespace {

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len2 = norm2(d);
  const double t = len2 > 0.0 ? std::clamp(dot(p - a, d) / len2, 0.0, 1.0) : 0.0;
  return distance(p, a + t * d);
}

double endpoint_transversality(const VertexAnnotation& ann) {
  double best = std::numeric_limits<double>::infinity();
  const Point2 tau{-std::sin(ann.theta), std::cos(ann.theta)};
  if (ann.nu_A) best = std::min(best, std::abs(dot(tau, *ann.nu_A)));
  for (double vt : ann.vartheta) best = std::min(best, std::abs(std::sin(vt - ann.theta)));
  return best;
}

}  // namespace

DiagnosticsReport screen_nondegenerate(const Region& region, const Configuration& cfg) {
  cfg.validate();
  DiagnosticsReport rep;
  const std::size_t m = cfg.size();
  const double r = cfg.radius;
  const double eps = region.eps_deg();
  const auto& x = cfg.centers;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = i + 1; l < m; ++l) {
      const double d = distance(x[i], x[l]);
      rep.min_center_distance = std::min(rep.min_center_distance, d);
      rep.min_tangency_margin = std::min(rep.min_tangency_margin, std::abs(d - 2.0 * r));
      if (d <= 0.0 || d >= 2.0 * r) continue;
      // The two crossing points of circles i and l.
      const Point2 mid = 0.5 * (x[i] + x[l]);
      const Point2 u = (x[l] - x[i]) / d;
      const double h = std::sqrt(std::max(r * r - 0.25 * d * d, 0.0));
      for (const Point2 z : {mid + h * Point2{-u.y, u.x}, mid - h * Point2{-u.y, u.x}}) {
        if (!region.contains(z)) continue;
        for (std::size_t k = l + 1; k < m; ++k) {
          if (std::abs(distance(z, x[k]) - r) < eps) ++rep.near_triple;
        }
      }
    }
  }

  for (std::size_t j = 0; j < region.size(); ++j) {
    const ConvexPolygon& poly = region.polygon(j);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (!region.edge_on_boundary(j, k)) continue;
      for (std::size_t i = 0; i < m; ++i) {
        const double d = segment_distance(x[i], poly[k], poly.next(k));
        rep.min_boundary_margin = std::min(rep.min_boundary_margin, std::abs(d - r));
      }
    }
  }

  const Partition part = build_partition(region, cfg);
  for (const BallBook& ball : part.book.balls) {
    for (const Arc& a : ball.arcs) {
      rep.min_transversality = std::min({rep.min_transversality, endpoint_transversality(a.ann_v),
                                         endpoint_transversality(a.ann_w)});
    }
  }
  rep.corner_contacts = part.flags.corner_contacts + part.flags.mixed_endpoints;

  rep.ok = rep.min_center_distance > eps && rep.min_tangency_margin > eps && rep.min_boundary_margin > eps &&
           rep.min_transversality > kAngularMargin && rep.near_triple == 0 && rep.corner_contacts == 0 &&
           part.flags.coincident_centers == 0;
  return rep;
}

}  // namespace cover
