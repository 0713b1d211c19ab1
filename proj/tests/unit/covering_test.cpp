#include <gtest/gtest.h>

#include "helpers.hpp"

namespace cover {
namespace {

using testing::kPi;

Configuration equilateral(Point2 c, double side, double r) {
  const double rho = side / std::sqrt(3.0);
  return {{c + rho * unit(kPi / 2), c + rho * unit(kPi / 2 + 2 * kPi / 3), c + rho * unit(kPi / 2 + 4 * kPi / 3)}, r};
}

TEST(Value, TwoBallCornerExample) {
  const Region region = testing::square_region(3);
  const Configuration cfg{{{0, 3}, {1.2, 1.7}}, 1.0};
  EXPECT_NEAR(evaluate(region, cfg, Order::Value).g, 9 - 3.781718647855564, 1e-12);
}

TEST(Value, InteriorBall) {
  const Region region = testing::square_region(3);
  EXPECT_NEAR(evaluate(region, {{{1.5, 1.5}}, 0.7}, Order::Value).g, 9 - kPi * 0.49, 1e-14);
}

TEST(Value, LensSweep) {
  const Region region = testing::square_region(10);
  const double r = 1.0;
  for (int k = 2; k <= 18; ++k) {
    const double d = 0.1 * k * r;
    const Configuration cfg{{{5 - d / 2, 5}, {5 + d / 2, 5}}, r};
    EXPECT_NEAR(evaluate(region, cfg, Order::Value).g, 100 - 2 * kPi * r * r + lens_area(r, d), 1e-10) << d;
  }
}

// Inclusion-exclusion for three equal discs.
TEST(Value, ThreeBallsMatchInclusionExclusion) {
  const Region region = testing::square_region(10);
  const double r = 1.0;
  for (double f = 1.2; f <= 1.7 + 1e-9; f += 0.1) {
    const double side = std::sqrt(3.0) * r / f;
    const double g = evaluate(region, equilateral({5, 5}, side, r), Order::Value).g;
    const double union_area = 3 * kPi * r * r - 3 * lens_area(r, side) + triple_disk_area(r, side);
    EXPECT_NEAR(g, 100 - union_area, 1e-10) << side;
  }
}

TEST(Gradient, InteriorBallCircleBranch) {
  const Region region = testing::square_region(3);
  const DerivativeBundle b = evaluate(region, {{{1.5, 1.5}}, 0.7}, Order::Hessian);
  EXPECT_EQ(b.grad[0], 0.0);
  EXPECT_EQ(b.grad[1], 0.0);
  EXPECT_DOUBLE_EQ(b.grad[2], -2 * kPi * 0.7);
  const Eigen::MatrixXd H = symmetric_dense(b.hess);
  EXPECT_DOUBLE_EQ(H(2, 2), -2 * kPi);
  EXPECT_EQ(H.topLeftCorner(2, 2).norm(), 0.0);
  EXPECT_EQ(H.block(2, 0, 1, 2).norm(), 0.0);
}

TEST(Gradient, TwoDisjointInteriorBalls) {
  const Region region = testing::square_region(10);
  const DerivativeBundle b = evaluate(region, {{{3, 3}, {7, 7}}, 1.0}, Order::Hessian);
  const Eigen::MatrixXd H = symmetric_dense(b.hess);
  EXPECT_DOUBLE_EQ(H(4, 4), -4 * kPi);
  EXPECT_EQ(H.topLeftCorner(4, 4).norm(), 0.0);
}

TEST(Gradient, QuarterDiskAtCorner) {
  const Region region = testing::square_region(2);
  const Configuration cfg{{{0, 0}}, 1.0};
  const DerivativeBundle b = evaluate(region, cfg, Order::Gradient);
  EXPECT_NEAR(b.grad[2], -kPi / 2, 1e-14);
  EXPECT_NEAR(b.grad[0], -1.0, 1e-14);
  EXPECT_NEAR(b.grad[1], -1.0, 1e-14);
  // The corner is a kink of G in x; r alone is smooth.
  Configuration up = cfg, dn = cfg;
  up.radius += 1e-6;
  dn.radius -= 1e-6;
  const double fd_r = (evaluate(region, up, Order::Value).g - evaluate(region, dn, Order::Value).g) / 2e-6;
  EXPECT_NEAR(fd_r, -kPi / 2, 1e-8);
}

TEST(Derivatives, MatchFiniteDifferencesOnTwoSquares) {
  const Region region = testing::two_squares();
  for (std::uint64_t k = 0; k < 30; ++k) {
    const Configuration cfg = random_screened_config(region, 3, 2024, k);
    const DerivativeBundle b = evaluate(region, cfg, Order::Hessian);
    const Eigen::VectorXd fg = fd_gradient(region, cfg);
    const Eigen::MatrixXd fh = fd_hessian(region, cfg);
    const Eigen::MatrixXd H = symmetric_dense(b.hess);
    for (Eigen::Index i = 0; i < fg.size(); ++i) {
      EXPECT_LE(std::abs(fg[i] - b.grad[i]), 1e-6 * (1 + std::abs(b.grad[i]))) << k;
      for (Eigen::Index j = 0; j < fg.size(); ++j)
        EXPECT_LE(std::abs(fh(i, j) - H(i, j)), 1e-5 * (1 + std::abs(H(i, j)))) << k << " " << i << "," << j;
    }
  }
}

TEST(Derivatives, HessianStoredAsLowerTriangle) {
  const Region region = get_instance("minkowski");
  const Configuration cfg = random_screened_config(region, 12, 3, 0);
  const LowerHessian h = evaluate(region, cfg, Order::Hessian).hess;
  for (int k = 0; k < h.outerSize(); ++k)
    for (LowerHessian::InnerIterator it(h, k); it; ++it) EXPECT_GE(it.row(), it.col());
  const Eigen::MatrixXd H = symmetric_dense(h);
  EXPECT_EQ((H - H.transpose()).norm(), 0.0);
}

TEST(Derivatives, RadiusDerivativeIsMinusArcLength) {
  for (const std::string& name : instance_names()) {
    const Region region = get_instance(name);
    for (std::uint64_t k = 0; k < 5; ++k) {
      const Configuration cfg = random_screened_config(region, 7, 77, k);
      const Partition p = build_partition(region, cfg);
      double length = 0.0;
      for (const BallBook& ball : p.book.balls) {
        if (ball.circle) length += 2 * kPi * cfg.radius;
        for (const Arc& a : ball.arcs) length += cfg.radius * a.span();
      }
      const DerivativeBundle b = evaluate(region, cfg, Order::Gradient);
      EXPECT_LE(b.grad[b.grad.size() - 1], 0.0);
      EXPECT_NEAR(b.grad[b.grad.size() - 1], -length, 1e-12 * (1 + length));
      EXPECT_GE(b.g, -1e-12);
      EXPECT_LE(b.g, region.volume() + 1e-12);
    }
  }
}

TEST(Derivatives, TranslationInvariance) {
  const Region region = get_instance("star");
  const Point2 shift{12.5, -7.25};
  const auto move = [shift](Point2 p) { return p + shift; };
  const Region moved = testing::map_region(region, move);
  for (std::uint64_t k = 0; k < 5; ++k) {
    const Configuration cfg = random_screened_config(region, 6, 8, k);
    const DerivativeBundle a = evaluate(region, cfg, Order::Hessian);
    const DerivativeBundle b = evaluate(moved, testing::map_config(cfg, move), Order::Hessian);
    EXPECT_NEAR(a.g, b.g, 1e-11);
    EXPECT_LE((a.grad - b.grad).lpNorm<Eigen::Infinity>(), 1e-9);
    EXPECT_LE((symmetric_dense(a.hess) - symmetric_dense(b.hess)).lpNorm<Eigen::Infinity>(), 1e-7);
  }
}

TEST(Derivatives, RotationEquivariance) {
  const Region region = get_instance("nonconvex_holes");
  const double phi = 0.7;
  const auto turn = [phi](Point2 p) { return testing::rotate(p, phi); };
  const Region turned = testing::map_region(region, turn);
  for (std::uint64_t k = 0; k < 5; ++k) {
    const Configuration cfg = random_screened_config(region, 5, 9, k);
    const DerivativeBundle a = evaluate(region, cfg, Order::Hessian);
    const DerivativeBundle b = evaluate(turned, testing::map_config(cfg, turn), Order::Hessian);
    const Eigen::Index n = a.grad.size();
    Eigen::MatrixXd Q = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index i = 0; i + 1 < n; i += 2) {
      Q(i, i) = std::cos(phi);
      Q(i, i + 1) = -std::sin(phi);
      Q(i + 1, i) = std::sin(phi);
      Q(i + 1, i + 1) = std::cos(phi);
    }
    EXPECT_NEAR(a.g, b.g, 1e-13);
    EXPECT_LE((Q * a.grad - b.grad).lpNorm<Eigen::Infinity>(), 1e-11);
    const Eigen::MatrixXd Ha = Q * symmetric_dense(a.hess) * Q.transpose();
    EXPECT_LE((Ha - symmetric_dense(b.hess)).lpNorm<Eigen::Infinity>(), 1e-8 * (1 + Ha.lpNorm<Eigen::Infinity>()));
  }
}

TEST(Derivatives, CurvatureGrowsNearTangency) {
  const Region region = testing::square_region(10);
  double previous = 0.0;
  for (double gap : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const Configuration cfg{{{4, 5}, {6 - gap, 5}}, 1.0};
    const double hrr = std::abs(symmetric_dense(evaluate(region, cfg, Order::Hessian).hess)(4, 4));
    EXPECT_GT(hrr, previous) << gap;
    previous = hrr;
  }
}

TEST(Derivatives, NearSingularDenominatorsAreCounted) {
  const Region region = testing::square_region(10);
  const Configuration cfg{{{4, 5}, {6 - 1e-14, 5}}, 1.0};
  const Partition p = build_partition(region, cfg);
  int count = 0;
  eval_hess(p.book, cfg, 1e-6, &count);
  EXPECT_GT(count, 0);
  // The default margin is far below anything representable here.
  count = 0;
  eval_hess(p.book, cfg, 1e-9, &count);
  EXPECT_EQ(count, 0);
}

TEST(Evaluation, TallyCountsCalls) {
  const Region region = testing::square_region(1);
  const EvaluationTally before = thread_evaluation_tally();
  evaluate(region, {{{0.5, 0.5}}, 0.3}, Order::Value);
  evaluate(region, {{{0.5, 0.5}}, 0.3}, Order::Hessian);
  const EvaluationTally& after = thread_evaluation_tally();
  EXPECT_EQ(after.value - before.value, 1);
  EXPECT_EQ(after.gradient - before.gradient, 0);
  EXPECT_EQ(after.hessian - before.hessian, 1);
}

}  // namespace
}  // namespace cover
