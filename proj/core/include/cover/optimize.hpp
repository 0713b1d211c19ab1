#pragma once

#include <vector>

#include "cover/covering.hpp"
#include "cover/geometry.hpp"

namespace cover {

struct NewtonParams {
  double mu_min = 1e-8;           // first nonzero diagonal shift, relative to max |H_ij|
  double backtrack = 0.5;         // step reduction per rejected trial
  double armijo = 1e-4;           // sufficient-decrease constant
  int max_line_search = 50;
  double tol_factor = 0.1;        // tol_k = max(eps_opt, tol_factor * tol_{k-1})
  double radius_floor = 1e-10;    // lower bound on r, relative to diameter(A)
  double max_step = 0.25;         // longest step (inf-norm), relative to diameter(A)
};

struct ALParams {
  double eps_feas = 1e-8;
  double eps_opt = 1e-8;
  double lambda0 = 0.0;
  double rho0 = 10.0;
  double rho_growth = 10.0;
  double infeas_shrink = 0.5;
  double lambda_min = -1e12;
  double lambda_max = 1e12;
  int max_outer = 50;
  int max_inner = 200;
  NewtonParams newton;

  /// Throws InvalidInput when a field is out of range.
  void validate() const;
};

enum class SolveStatus { Converged, MaxIter, Degenerate };

const char* to_string(SolveStatus s);

struct Counters {
  long outer = 0;
  long inner = 0;
  long evals_G = 0;
  long evals_grad = 0;
  long evals_hess = 0;

  Counters& operator+=(const Counters& o);
};

/// State after one outer iteration.
struct OuterRecord {
  double g = 0.0;
  double lambda = 0.0;
  double rho = 0.0;
  double kkt_opt = 0.0;
};

struct SolveResult {
  Configuration cfg;
  double lambda = 0.0;
  double g = 0.0;
  double kkt_opt = 0.0;
  double kkt_feas = 0.0;
  SolveStatus status = SolveStatus::MaxIter;
  Counters counters;
  std::vector<OuterRecord> trace;
};

struct InnerResult {
  Configuration cfg;
  double residual = 0.0;
  int iterations = 0;
  bool stalled = false;
  /// Projected-gradient norm after each accepted step, starting point first.
  std::vector<double> history;
};

/// Counting front end to the covering evaluations.
DerivativeBundle counted_evaluate(const Region& region, const Configuration& cfg, Order order, Counters& counters);

/// Minimizes r + lambda G + (rho/2) G^2 subject to r >= floor by Newton steps
/// with a diagonal shift and projected Armijo backtracking.
InnerResult newton_inner(const Region& region, const Configuration& cfg, double lambda, double rho, double tol,
                         const NewtonParams& params, Counters& counters, int max_iter = 200);

/// (||e_r + lambda grad G||_inf, |G|) evaluated from scratch.
std::pair<double, double> kkt_residuals(const Region& region, const Configuration& cfg, double lambda);

/// Augmented Lagrangian for: minimize r subject to G(x, r) = 0, r >= 0.
SolveResult al_solve(const Region& region, const Configuration& cfg0, const ALParams& params = {});

}  // namespace cover
