#pragma once

#include <cstdint>
#include <vector>

#include "gsdesign/designs.hpp"

namespace gsd {

struct SimConfig {
  std::uint64_t replicates = 1'000'000;
  std::uint64_t seed = 1;
  double tau = 0.0;
};

/// Monte Carlo estimates of a design's operating characteristics, with the
/// integer per-stage arm sizes actually simulated.
struct SimResult {
  std::uint64_t replicates = 0;
  std::int64_t arm0_per_stage = 0;
  std::int64_t arm1_per_stage = 0;
  std::vector<double> reject_at;         ///< per-stage rejection frequencies
  std::vector<double> accept_at;         ///< per-stage acceptance frequencies
  std::vector<double> stage_stop_freq;   ///< reject_at + accept_at
  std::vector<double> se_stage_stop;
  double reject_rate = 0.0;
  double accept_rate = 0.0;
  double mean_n = 0.0;
  double se_reject = 0.0;
  double se_accept = 0.0;
  double se_mean_n = 0.0;
};

/// Information schedule at the integer (ceiling) per-stage arm sizes the
/// simulator uses; exact comparator for Monte Carlo results.
InformationSchedule integer_size_schedule(const Design& design);

/// Simulates trials under the canonical data model and applies the design's
/// stopping rule. Replicates are partitioned into fixed blocks whose RNG
/// substreams derive from (seed, block index), so results are bit-identical
/// for any worker count. Parallelised over blocks when OpenMP is enabled.
SimResult simulate_trials(const Design& design, const SimConfig& config);

/// Serial reference path: same block kernel, sequential execution.
SimResult simulate_trials_serial(const Design& design, const SimConfig& config);

}  // namespace gsd
