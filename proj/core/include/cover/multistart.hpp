#pragma once

#include <cstdint>
#include <vector>

#include "cover/optimize.hpp"

namespace cover {

class NoConvergedTrial : public Error {
public:
  using Error::Error;
};

struct TrialSummary {
  double r = 0.0;
  SolveStatus status = SolveStatus::MaxIter;
};

struct MultistartReport {
  SolveResult best;
  int best_trial = 0;  // 1-based
  std::vector<TrialSummary> per_trial;
  int trials = 0;
  std::uint64_t seed = 0;
  double wall_time = 0.0;  // seconds
};

/// Initial guess of trial t (1-based): centers uniform on A by rejection from
/// the bounding box, r0 = (bounding-box diagonal) / sqrt(m).
Configuration initial_guess(const Region& region, int m, std::uint64_t seed, int trial);

/// Runs al_solve from `trials` random starts and keeps the converged result
/// with the smallest radius (ties go to the lower ordinal). `threads` <= 0
/// reads COVER_THREADS, defaulting to the hardware concurrency.
MultistartReport run_multistart(const Region& region, int m, int trials, std::uint64_t seed,
                                const ALParams& params = {}, int threads = 0);

}  // namespace cover
