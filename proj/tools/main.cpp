// cover: command-line front end for the ball-covering solver.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cover/cover.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kSolveFailed = 3;

struct RegionSource {
  std::string file;
  std::string instance;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--region", file, "Region JSON file");
    auto* i = cmd->add_option("--instance", instance, "Built-in region name");
    f->excludes(i);
  }

  cover::Region load() const {
    if (!file.empty()) return cover::region_from_json(cover::read_file(file));
    if (!instance.empty()) return cover::get_instance(instance);
    throw cover::InvalidInput("one of --region or --instance is required");
  }

  std::string label() const { return instance.empty() ? file : instance; }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    cover::write_file(path, text);
  }
}

int cmd_solve(const RegionSource& src, int m, int trials, std::uint64_t seed, double eps_feas, double eps_opt,
              int threads, const std::string& out) {
  if (m < 1 || trials < 1) throw cover::InvalidInput("--m and --trials must be at least 1");
  const cover::Region region = src.load();
  cover::ALParams params;
  params.eps_feas = eps_feas;
  params.eps_opt = eps_opt;
  const cover::MultistartReport rep = cover::run_multistart(region, m, trials, seed, params, threads);
  if (!out.empty()) cover::write_file(out, cover::solution_to_json(rep));
  const auto& b = rep.best;
  std::printf("%-16s %4s %24s %10s %6s %6s %6s %7s %7s %7s %9s\n", "problem", "m", "r*", "G(x*,r*)", "trial", "outit",
              "innit", "Alg.1", "Alg.2", "Alg.3", "time(s)");
  std::printf("%-16s %4d %24.17g %10.1e %6d %6ld %6ld %7ld %7ld %7ld %9.2f\n", src.label().c_str(), m, b.cfg.radius, b.g,
              rep.best_trial, b.counters.outer, b.counters.inner, b.counters.evals_G, b.counters.evals_grad,
              b.counters.evals_hess, rep.wall_time);
  return kOk;
}

int cmd_eval(const RegionSource& src, const std::string& config, bool grad, bool hess, bool screen) {
  const cover::Region region = src.load();
  const cover::Configuration cfg = cover::config_from_json(cover::read_file(config));
  const cover::Order order = hess ? cover::Order::Hessian : grad ? cover::Order::Gradient : cover::Order::Value;
  const cover::DerivativeBundle b = cover::evaluate(region, cfg, order);
  std::optional<cover::DiagnosticsReport> rep;
  if (screen) rep = cover::screen_nondegenerate(region, cfg);
  std::cout << cover::evaluation_to_json(b, grad, hess, rep ? &*rep : nullptr);
  return kOk;
}

int cmd_check(const RegionSource& src, int m, std::uint64_t seed, int configs, const std::string& config, double h_grad,
              double h_hess, double margin) {
  if (config.empty() && configs < 1) throw cover::InvalidInput("--configs must be at least 1");
  if (m < 1) throw cover::InvalidInput("--m must be at least 1");
  const cover::Region region = src.load();
  double worst_grad = 0.0, worst_hess = 0.0;
  int near_singular = 0;
  const int count = config.empty() ? configs : 1;
  for (int k = 0; k < count; ++k) {
    const cover::Configuration cfg = config.empty()
                                         ? cover::random_screened_config(region, m, seed, static_cast<std::uint64_t>(k))
                                         : cover::config_from_json(cover::read_file(config));
    const cover::DerivativeBundle b = cover::evaluate(region, cfg, cover::Order::Hessian);
    cover::eval_hess(cover::build_partition(region, cfg).book, cfg, margin, &near_singular);
    const Eigen::VectorXd fg = cover::fd_gradient(region, cfg, h_grad);
    const Eigen::MatrixXd fh = cover::fd_hessian(region, cfg, h_hess);
    const Eigen::MatrixXd H = cover::symmetric_dense(b.hess);
    for (Eigen::Index i = 0; i < fg.size(); ++i) {
      worst_grad = std::max(worst_grad, std::abs(fg[i] - b.grad[i]) / (1.0 + std::abs(b.grad[i])));
      for (Eigen::Index j = 0; j < fg.size(); ++j) {
        worst_hess = std::max(worst_hess, std::abs(fh(i, j) - H(i, j)) / (1.0 + std::abs(H(i, j))));
      }
    }
  }
  const bool pass = worst_grad <= 1e-6 && worst_hess <= 1e-5;
  std::printf("configs %d\nmax_grad_error %.3e\nmax_hess_error %.3e\nnear_singular %d\n%s\n", count, worst_grad,
              worst_hess, near_singular, pass ? "PASS" : "FAIL");
  return pass ? kOk : 1;
}

int cmd_render(const RegionSource& src, const std::string& config, const std::string& out, bool partition, bool no_arcs,
               int size) {
  const cover::Region region = src.load();
  std::optional<cover::Configuration> cfg;
  if (!config.empty()) cfg = cover::config_from_solution_json(cover::read_file(config));
  cover::RenderOptions opt;
  opt.partition = partition;
  opt.arcs = !no_arcs;
  opt.size = size;
  emit(cover::render_svg(region, cfg, opt), out);
  return kOk;
}

int cmd_instances(bool list, const std::string& name, const std::string& out) {
  if (list) {
    for (const std::string& n : cover::instance_names()) std::cout << n << "\n";
    return kOk;
  }
  if (name.empty()) throw cover::InvalidInput("use --list or --emit NAME");
  emit(cover::region_to_json(cover::get_instance(name)), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-radius covering of polygonal regions by m equal balls"};
  app.require_subcommand(1);

  RegionSource src;
  int m = 0, trials = 10, configs = 10, threads = 0, size = 1024;
  std::uint64_t seed = 1;
  double eps_feas = 1e-8, eps_opt = 1e-8, h_grad = 1e-6, h_hess = 1e-6, margin = 1e-9;
  std::string out, config, emit_name;
  bool grad = false, hess = false, screen = false, list = false, partition = false, no_arcs = false;

  auto* solve = app.add_subcommand("solve", "Multistart solve; writes a solution JSON");
  src.attach(solve);
  solve->add_option("--m", m, "Number of balls")->required();
  solve->add_option("--trials", trials, "Number of random starts");
  solve->add_option("--seed", seed, "Random seed");
  solve->add_option("--eps-feas", eps_feas, "Feasibility tolerance on |G|");
  solve->add_option("--eps-opt", eps_opt, "Optimality tolerance");
  solve->add_option("--threads", threads, "Worker threads (default: COVER_THREADS or all cores)");
  solve->add_option("--out", out, "Solution JSON path");

  auto* eval = app.add_subcommand("eval", "Evaluate G and derivatives at a configuration");
  src.attach(eval);
  eval->add_option("--config", config, "Configuration JSON {centers, r}")->required();
  eval->add_flag("--grad", grad, "Include the gradient");
  eval->add_flag("--hess", hess, "Include the Hessian");
  eval->add_flag("--screen", screen, "Include degeneracy diagnostics");

  auto* check = app.add_subcommand("check", "Compare derivatives with finite differences");
  src.attach(check);
  check->add_option("--m", m, "Number of balls")->default_val(3);
  check->add_option("--seed", seed, "Random seed");
  check->add_option("--configs", configs, "Number of random screened configurations");
  check->add_option("--config", config, "Check this configuration instead of random ones");
  check->add_option("--h-grad", h_grad, "Gradient difference step");
  check->add_option("--h-hess", h_hess, "Hessian difference step");
  check->add_option("--margin", margin, "Near-singular threshold for |sin| and |nu_A . tau|");

  auto* render = app.add_subcommand("render", "Draw a region and optional covering as SVG");
  src.attach(render);
  render->add_option("--config", config, "Configuration or solution JSON");
  render->add_option("--out", out, "SVG path (default stdout)");
  render->add_flag("--partition", partition, "Draw the Voronoi-restricted cells");
  render->add_flag("--no-arcs", no_arcs, "Do not highlight uncovered-boundary arcs");
  render->add_option("--size", size, "Longer side in pixels")->check(CLI::PositiveNumber);

  auto* inst = app.add_subcommand("instances", "List or emit the built-in regions");
  inst->add_flag("--list", list, "List names");
  inst->add_option("--emit", emit_name, "Write NAME as region JSON");
  inst->add_option("--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) return cmd_solve(src, m, trials, seed, eps_feas, eps_opt, threads, out);
    if (*eval) return cmd_eval(src, config, grad, hess, screen);
    if (*check) return cmd_check(src, m, seed, configs, config, h_grad, h_hess, margin);
    if (*render) return cmd_render(src, config, out, partition, no_arcs, size);
    if (*inst) return cmd_instances(list, emit_name, out);
  } catch (const cover::NoConvergedTrial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolveFailed;
  } catch (const cover::Error& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  return kUsage;
}
