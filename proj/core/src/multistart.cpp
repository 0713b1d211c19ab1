#include "cover/multistart.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "cover/rng.hpp"

namespace cover {

namespace {

int thread_count(int requested, int trials) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("COVER_THREADS")) {
      try {
        n = std::stoi(env);
      } catch (const std::exception&) {
        n = 0;
      }
    }
  }
  if (n <= 0) n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::clamp(n, 1, trials);
}

}  // namespace

Configuration initial_guess(const Region& region, int m, std::uint64_t seed, int trial) {
  SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(trial));
  const BoundingBox& box = region.bounds();
  const Point2 span = box.hi - box.lo;
  Configuration cfg;
  cfg.centers.reserve(static_cast<std::size_t>(m));
  while (static_cast<int>(cfg.centers.size()) < m) {
    const Point2 p{box.lo.x + span.x * rng.uniform(), box.lo.y + span.y * rng.uniform()};
    if (region.contains(p)) cfg.centers.push_back(p);
  }
  cfg.radius = norm(span) / std::sqrt(static_cast<double>(m));
  return cfg;
}

MultistartReport run_multistart(const Region& region, int m, int trials, std::uint64_t seed, const ALParams& params,
                                int threads) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  params.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<SolveResult> results(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      results[static_cast<std::size_t>(t)] = al_solve(region, initial_guess(region, m, seed, t + 1), params);
    }
  };
  const int n_threads = thread_count(threads, trials);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  }

  MultistartReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.per_trial.reserve(results.size());
  for (std::size_t t = 0; t < results.size(); ++t) {
    const SolveResult& s = results[t];
    rep.per_trial.push_back({s.cfg.radius, s.status});
    if (s.status != SolveStatus::Converged) continue;
    if (rep.best_trial == 0 || s.cfg.radius < rep.best.cfg.radius) {
      rep.best = s;
      rep.best_trial = static_cast<int>(t) + 1;
    }
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (rep.best_trial == 0) throw NoConvergedTrial("no trial converged out of " + std::to_string(trials));
  return rep;
}

}  // namespace cover
