#include "cover/covering.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace cover {

namespace {

constexpr double kPi = std::numbers::pi;

double reduce_angle(double d) {
  d = std::remainder(d, 2.0 * kPi);  // [-pi, pi]
  if (d <= -kPi) d += 2.0 * kPi;
  return d;
}

struct Triplets {
  std::vector<Eigen::Triplet<double>> items;
  void add(Eigen::Index row, Eigen::Index col, double v) {
    if (v != 0.0) items.emplace_back(row, col, v);
  }
};

}  // namespace

Eigen::MatrixXd symmetric_dense(const LowerHessian& lower) {
  Eigen::MatrixXd d = Eigen::MatrixXd(lower);
  Eigen::MatrixXd full = d + d.transpose();
  full.diagonal() = d.diagonal();
  return full;
}

double eval_G(const Region& region, const ArcBook& book, const Configuration& cfg) {
  const double r = cfg.radius;
  double covered = 0.0;
  for (std::size_t i = 0; i < book.size(); ++i) {
    const BallBook& ball = book.balls[i];
    if (ball.circle) {
      covered += kPi * r * r;
      continue;
    }
    for (const auto& [v, w] : ball.edges) covered += segment_x_dy(v, w);
    for (const Arc& a : ball.arcs) covered += arc_x_dy(cfg.centers[i], r, a.theta_v, a.span());
  }
  return region.volume() - covered;
}

Eigen::VectorXd eval_grad(const ArcBook& book, const Configuration& cfg) {
  const std::size_t m = cfg.size();
  const double r = cfg.radius;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * m + 1));
  const auto ir = static_cast<Eigen::Index>(2 * m);
  for (std::size_t i = 0; i < book.size(); ++i) {
    const BallBook& ball = book.balls[i];
    const auto ix = static_cast<Eigen::Index>(2 * i);
    if (ball.circle) {
      g[ir] -= 2.0 * kPi * r;
      continue;
    }
    for (const Arc& a : ball.arcs) {
      g[ir] -= r * a.span();
      g[ix] += r * (std::sin(a.theta_v) - std::sin(a.theta_w));
      g[ix + 1] += r * (std::cos(a.theta_w) - std::cos(a.theta_v));
    }
  }
  return g;
}

LowerHessian eval_hess(const ArcBook& book, const Configuration& cfg, double margin, int* near_singular) {
  const std::size_t m = cfg.size();
  const auto n = static_cast<Eigen::Index>(2 * m + 1);
  const auto ir = static_cast<Eigen::Index>(2 * m);
  Triplets t;
  t.items.reserve(16 * m + 1);
  int singular = 0;

  for (std::size_t i = 0; i < book.size(); ++i) {
    const BallBook& ball = book.balls[i];
    const auto ix = static_cast<Eigen::Index>(2 * i);
    if (ball.circle) {
      t.add(ir, ir, -2.0 * kPi);
      continue;
    }
    for (const Arc& a : ball.arcs) {
      const double tv = a.theta_v, tw = a.theta_w;
      const double cv = std::cos(tv), sv = std::sin(tv);
      const double cw = std::cos(tw), sw = std::sin(tw);
      const double c_sum = std::cos(tv + tw);
      t.add(ix, ix, std::sin(tv - tw) * c_sum);
      t.add(ix + 1, ix, cw * cw - cv * cv);
      t.add(ix + 1, ix + 1, std::sin(tw - tv) * c_sum);
      t.add(ir, ix, sv - sw);
      t.add(ir, ix + 1, cw - cv);
      t.add(ir, ir, tv - tw);

      for (int end = 0; end < 2; ++end) {
        const VertexAnnotation& ann = end == 0 ? a.ann_v : a.ann_w;
        const double sign = end == 0 ? -1.0 : 1.0;
        const double th = end == 0 ? tv : tw;
        const double c = std::cos(th), s = std::sin(th);

        if (ann.on_boundary_A && ann.nu_A) {
          const Point2 nu_a = *ann.nu_A;
          const double normal = nu_a.x * c + nu_a.y * s;
          const double tangent = -nu_a.x * s + nu_a.y * c;
          if (std::abs(tangent) < margin) ++singular;
          const double alpha = normal / tangent;
          t.add(ix, ix, sign * alpha * c * c);
          t.add(ix + 1, ix, sign * alpha * s * c);
          t.add(ix + 1, ix + 1, sign * alpha * s * s);
          t.add(ir, ix, sign * alpha * c);
          t.add(ir, ix + 1, sign * alpha * s);
          t.add(ir, ir, sign * alpha);
        }
        for (std::size_t q = 0; q < ann.L.size(); ++q) {
          const int l = ann.L[q];
          const double vt = ann.vartheta[q];
          const double gap = reduce_angle(vt - th);
          const double sg = std::sin(gap);
          if (std::abs(sg) < margin) ++singular;
          const double cot = std::cos(gap) / sg;
          t.add(ix, ix, sign * cot * c * c);
          t.add(ix + 1, ix, sign * cot * s * c);
          t.add(ix + 1, ix + 1, sign * cot * s * s);
          t.add(ir, ix, sign * (cot * c - c / sg));
          t.add(ir, ix + 1, sign * (cot * s - s / sg));
          t.add(ir, ir, sign * (std::cos(gap) - 1.0) / sg);
          if (static_cast<std::size_t>(l) > i) {
            const auto lx = static_cast<Eigen::Index>(2 * l);
            const double cl = std::cos(vt), sl = std::sin(vt);
            const double f = -sign / sg;
            t.add(lx, ix, f * c * cl);
            t.add(lx, ix + 1, f * s * cl);
            t.add(lx + 1, ix, f * c * sl);
            t.add(lx + 1, ix + 1, f * s * sl);
          }
        }
      }
    }
  }

  LowerHessian h(n, n);
  h.setFromTriplets(t.items.begin(), t.items.end());
  if (near_singular) *near_singular += singular;
  return h;
}

EvaluationTally& thread_evaluation_tally() {
  thread_local EvaluationTally tally;
  return tally;
}

DerivativeBundle evaluate(const Region& region, const Configuration& cfg, Order order) {
  EvaluationTally& tally = thread_evaluation_tally();
  ++(order == Order::Value ? tally.value : order == Order::Gradient ? tally.gradient : tally.hessian);
  const Partition part = build_partition(region, cfg);
  DerivativeBundle out;
  out.flags = part.flags;
  out.g = eval_G(region, part.book, cfg);
  if (order != Order::Value) out.grad = eval_grad(part.book, cfg);
  if (order == Order::Hessian) out.hess = eval_hess(part.book, cfg, 1e-9, &out.near_singular);
  return out;
}

}  // namespace cover
