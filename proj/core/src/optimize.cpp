#include "cover/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "cover/screening.hpp"

namespace cover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

void ALParams::validate() const {
  if (!(eps_feas > 0.0) || !(eps_opt > 0.0)) throw InvalidInput("tolerances must be positive");
  if (!(rho0 > 0.0)) throw InvalidInput("rho0 must be positive");
  if (!(rho_growth > 1.0)) throw InvalidInput("rho_growth must exceed 1");
  if (!(infeas_shrink > 0.0 && infeas_shrink < 1.0)) throw InvalidInput("infeas_shrink must lie in (0, 1)");
  if (!(lambda_min <= lambda0 && lambda0 <= lambda_max)) throw InvalidInput("lambda0 outside lambda bounds");
  if (max_outer < 1 || max_inner < 1) throw InvalidInput("iteration budgets must be positive");
  if (!(newton.armijo > 0.0 && newton.armijo <= 0.5)) throw InvalidInput("armijo constant must lie in (0, 0.5]");
  if (!(newton.backtrack > 0.0 && newton.backtrack < 1.0)) throw InvalidInput("backtrack factor must lie in (0, 1)");
  if (!(newton.tol_factor > 0.0 && newton.tol_factor < 1.0)) throw InvalidInput("tol_factor must lie in (0, 1)");
  if (!(newton.mu_min > 0.0)) throw InvalidInput("mu_min must be positive");
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIter: return "max_iter";
    case SolveStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

Counters& Counters::operator+=(const Counters& o) {
  outer += o.outer;
  inner += o.inner;
  evals_G += o.evals_G;
  evals_grad += o.evals_grad;
  evals_hess += o.evals_hess;
  return *this;
}

DerivativeBundle counted_evaluate(const Region& region, const Configuration& cfg, Order order, Counters& counters) {
  ++counters.evals_G;
  if (order != Order::Value) ++counters.evals_grad;
  if (order == Order::Hessian) ++counters.evals_hess;
  return evaluate(region, cfg, order);
}

InnerResult newton_inner(const Region& region, const Configuration& cfg, double lambda, double rho, double tol,
                         const NewtonParams& params, Counters& counters, int max_iter) {
  InnerResult out;
  out.cfg = cfg;
  if (!(tol < kInf)) return out;

  const double floor = params.radius_floor * region.diameter();
  const double max_step = params.max_step * region.diameter();
  Eigen::VectorXd x = cfg.packed();
  const Eigen::Index n = x.size();
  const Eigen::Index ir = n - 1;

  auto merit = [&](const Eigen::VectorXd& z) {
    try {
      const double g = counted_evaluate(region, Configuration::unpack(z), Order::Value, counters).g;
      return z[ir] + lambda * g + 0.5 * rho * g * g;
    } catch (const Error&) {
      return kInf;
    }
  };

  DerivativeBundle b = counted_evaluate(region, cfg, Order::Hessian, counters);
  double f = x[ir] + lambda * b.g + 0.5 * rho * b.g * b.g;

  while (true) {
    const double c = lambda + rho * b.g;
    Eigen::VectorXd grad = c * b.grad;
    grad[ir] += 1.0;
    const bool r_active = x[ir] <= floor && grad[ir] > 0.0;
    Eigen::VectorXd pg = grad;
    if (r_active) pg[ir] = 0.0;
    out.residual = pg.lpNorm<Eigen::Infinity>();
    out.history.push_back(out.residual);
    if (out.residual <= tol || out.iterations >= max_iter) break;

    Eigen::MatrixXd H = c * symmetric_dense(b.hess) + rho * b.grad * b.grad.transpose();
    const Eigen::Index nf = r_active ? n - 1 : n;
    const Eigen::MatrixXd Hf = H.topLeftCorner(nf, nf);
    const Eigen::VectorXd gf = pg.head(nf);
    const double scale = std::max(1.0, Hf.cwiseAbs().maxCoeff());

    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    bool found = false;
    double mu = 0.0;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
      Eigen::MatrixXd M = Hf;
      M.diagonal().array() += mu;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(M);
      if (ldlt.info() == Eigen::Success && (ldlt.vectorD().array() > 0.0).all()) {
        const Eigen::VectorXd step = ldlt.solve(-gf);
        if (step.allFinite() && gf.dot(step) < 0.0) {
          d.head(nf) = step;
          found = true;
        }
      }
      mu = mu == 0.0 ? params.mu_min * scale : 2.0 * mu;
    }
    if (!found) d.head(nf) = -gf;
    const double longest = d.lpNorm<Eigen::Infinity>();
    if (longest > max_step) d *= max_step / longest;

    // Rounding level of the merit: G is a difference of areas of size Vol(A).
    const double noise = 64.0 * kEps * (std::abs(x[ir]) + std::abs(c) * region.volume() + std::abs(f));
    const double slope = grad.dot(d);
    if (-slope <= noise) {
      // The merit cannot rank points this close; take the full step when it
      // lowers the projected-gradient residual, otherwise hand back to the
      // outer loop.
      Eigen::VectorXd z = x + d;
      z[ir] = std::max(z[ir], floor);
      DerivativeBundle bz;
      try {
        bz = counted_evaluate(region, Configuration::unpack(z), Order::Hessian, counters);
      } catch (const Error&) {
        out.stalled = true;
        break;
      }
      Eigen::VectorXd gz = (lambda + rho * bz.g) * bz.grad;
      gz[ir] += 1.0;
      if (z[ir] <= floor && gz[ir] > 0.0) gz[ir] = 0.0;
      if (z == x || !(gz.lpNorm<Eigen::Infinity>() < out.residual)) {
        out.stalled = true;
        break;
      }
      x = z;
      f = x[ir] + lambda * bz.g + 0.5 * rho * bz.g * bz.g;
      b = std::move(bz);
      ++out.iterations;
      continue;
    }

    double alpha = 1.0;
    bool accepted = false;
    Eigen::VectorXd z;
    double fz = kInf;
    for (int ls = 0; ls < params.max_line_search; ++ls) {
      z = x + alpha * d;
      z[ir] = std::max(z[ir], floor);
      fz = merit(z);
      if (fz <= f + params.armijo * grad.dot(z - x)) {
        accepted = true;
        break;
      }
      alpha *= params.backtrack;
    }
    if (!accepted || z == x) {
      out.stalled = true;
      break;
    }
    x = z;
    f = fz;
    ++out.iterations;
    b = counted_evaluate(region, Configuration::unpack(x), Order::Hessian, counters);
  }
  out.cfg = Configuration::unpack(x);
  return out;
}

std::pair<double, double> kkt_residuals(const Region& region, const Configuration& cfg, double lambda) {
  const DerivativeBundle b = evaluate(region, cfg, Order::Gradient);
  Eigen::VectorXd s = lambda * b.grad;
  s[s.size() - 1] += 1.0;
  return {s.lpNorm<Eigen::Infinity>(), std::abs(b.g)};
}

SolveResult al_solve(const Region& region, const Configuration& cfg0, const ALParams& params) {
  params.validate();
  cfg0.validate();

  SolveResult res;
  Configuration x = cfg0;
  double lambda = params.lambda0;
  double rho = params.rho0;
  double tol = std::max(params.eps_opt, std::sqrt(params.eps_opt));
  double prev_infeas = kInf;

  for (int outer = 0; outer < params.max_outer; ++outer) {
    ++res.counters.outer;
    const InnerResult inner =
        newton_inner(region, x, lambda, rho, tol, params.newton, res.counters, params.max_inner);
    res.counters.inner += inner.iterations;
    x = inner.cfg;

    const DerivativeBundle b = counted_evaluate(region, x, Order::Gradient, res.counters);
    const double next_lambda = std::clamp(lambda + rho * b.g, params.lambda_min, params.lambda_max);
    Eigen::VectorXd s = next_lambda * b.grad;
    s[s.size() - 1] += 1.0;
    res.cfg = x;
    res.lambda = next_lambda;
    res.g = b.g;
    res.kkt_opt = s.lpNorm<Eigen::Infinity>();
    res.kkt_feas = std::abs(b.g);
    res.trace.push_back({b.g, next_lambda, rho, res.kkt_opt});
    if (res.kkt_opt <= params.eps_opt && res.kkt_feas <= params.eps_feas && x.radius > 0.0) {
      res.status = SolveStatus::Converged;
      return res;
    }
    if (res.kkt_feas > params.eps_feas && res.kkt_feas > params.infeas_shrink * prev_infeas) rho *= params.rho_growth;
    prev_infeas = res.kkt_feas;
    lambda = next_lambda;
    tol = std::max(params.eps_opt, params.newton.tol_factor * tol);
  }

  res.status = screen_nondegenerate(region, x).ok ? SolveStatus::MaxIter : SolveStatus::Degenerate;
  return res;
}

}  // namespace cover
