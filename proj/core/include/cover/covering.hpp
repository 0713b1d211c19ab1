#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "cover/geometry.hpp"
#include "cover/partition.hpp"

namespace cover {

/// Lower triangle of the Hessian in packed (x_1, ..., x_m, r) ordering.
using LowerHessian = Eigen::SparseMatrix<double>;

/// Full symmetric dense copy of a lower-triangle Hessian.
Eigen::MatrixXd symmetric_dense(const LowerHessian& lower);

struct DerivativeBundle {
  double g = 0.0;
  Eigen::VectorXd grad;
  LowerHessian hess;
  /// Endpoint terms evaluated with |sin(angle gap)| or |nu_A . tau| below the
  /// degeneracy margin.
  int near_singular = 0;
  DegeneracyFlags flags;
};

/// Uncovered area Vol(A) - Vol(A cap Omega).
double eval_G(const Region& region, const ArcBook& book, const Configuration& cfg);

Eigen::VectorXd eval_grad(const ArcBook& book, const Configuration& cfg);

/// `margin` is the dimensionless threshold below which an endpoint
/// denominator counts as near-singular (added to *near_singular).
LowerHessian eval_hess(const ArcBook& book, const Configuration& cfg, double margin = 1e-9,
                       int* near_singular = nullptr);

enum class Order { Value, Gradient, Hessian };

/// Builds the partition and evaluates up to the requested order.
DerivativeBundle evaluate(const Region& region, const Configuration& cfg, Order order);

/// Calls to evaluate() made by the current thread, by requested order.
struct EvaluationTally {
  long value = 0;
  long gradient = 0;
  long hessian = 0;
};
EvaluationTally& thread_evaluation_tally();

}  // namespace cover
