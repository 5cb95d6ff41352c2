#include "gsdesign/simulate.hpp"

#include <cmath>
#include <random>

#include "gsdesign/errors.hpp"
#include "gsdesign/normal.hpp"

namespace gsd {

namespace {

constexpr std::uint64_t kBlockSize = 4096;

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Everything the per-block kernel needs, precomputed once.
struct Kernel {
  int stages;
  bool two_sided;
  std::int64_t n0, n1;
  double sigma0, sigma1, tau;
  std::vector<double> sqrt_info;   // at the integer sizes
  std::vector<double> futility, efficacy;
  std::vector<double> stage_total;
};

struct BlockTally {
  std::vector<std::uint64_t> reject, accept;
  double sum_n = 0.0;
  double sum_n2 = 0.0;
};

BlockTally run_block(const Kernel& k, std::uint64_t seed, std::uint64_t block,
                     std::uint64_t count) {
  std::uint64_t state = seed;
  (void)splitmix64(state);
  state ^= (block + 1) * 0x9E3779B97F4A7C15ULL;
  std::mt19937_64 eng(splitmix64(state));
  auto draw_normal = [&eng]() {
    const double u = (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
    return norm_quantile(u);
  };

  BlockTally tally;
  tally.reject.assign(k.stages, 0);
  tally.accept.assign(k.stages, 0);
  const double scale0 = k.sigma0 * std::sqrt(static_cast<double>(k.n0));
  const double scale1 = k.sigma1 * std::sqrt(static_cast<double>(k.n1));
  const double drift1 = k.tau * static_cast<double>(k.n1);

  for (std::uint64_t rep = 0; rep < count; ++rep) {
    double sum0 = 0.0, sum1 = 0.0;
    for (int l = 1; l <= k.stages; ++l) {
      sum0 += scale0 * draw_normal();
      sum1 += drift1 + scale1 * draw_normal();
      const double diff = sum1 / static_cast<double>(l * k.n1) -
                          sum0 / static_cast<double>(l * k.n0);
      const double z = diff * k.sqrt_info[l - 1];
      const bool final_stage = (l == k.stages);
      bool stop_reject, stop_accept;
      if (k.two_sided) {
        stop_reject = std::fabs(z) >= k.efficacy[l - 1];
        stop_accept = !stop_reject &&
                      (final_stage || std::fabs(z) < k.futility[l - 1]);
      } else {
        stop_reject = z >= k.efficacy[l - 1];
        stop_accept = !stop_reject && (final_stage || z < k.futility[l - 1]);
      }
      if (stop_reject || stop_accept) {
        if (stop_reject) {
          ++tally.reject[l - 1];
        } else {
          ++tally.accept[l - 1];
        }
        tally.sum_n += k.stage_total[l - 1];
        tally.sum_n2 += k.stage_total[l - 1] * k.stage_total[l - 1];
        break;
      }
    }
  }
  return tally;
}

Kernel make_kernel(const Design& d, double tau) {
  Kernel k;
  k.stages = d.params.stages;
  k.two_sided = d.bounds.sidedness == Sidedness::TwoSided;
  k.n0 = static_cast<std::int64_t>(std::ceil(d.schedule.group_size));
  k.n1 = static_cast<std::int64_t>(std::ceil(d.params.ratio * d.schedule.group_size));
  k.sigma0 = d.params.sigma0;
  k.sigma1 = d.params.sigma1;
  k.tau = tau;
  k.futility = d.bounds.futility;
  k.efficacy = d.bounds.efficacy;
  k.sqrt_info.resize(k.stages);
  k.stage_total.resize(k.stages);
  const double s0 = d.params.sigma0, s1 = d.params.sigma1;
  for (int l = 1; l <= k.stages; ++l) {
    const double info = 1.0 / (s0 * s0 / static_cast<double>(l * k.n0) +
                               s1 * s1 / static_cast<double>(l * k.n1));
    k.sqrt_info[l - 1] = std::sqrt(info);
    k.stage_total[l - 1] = static_cast<double>(l * (k.n0 + k.n1));
  }
  return k;
}

SimResult run(const Design& d, const SimConfig& cfg, bool parallel) {
  if (cfg.replicates < 1) throw ParameterError("replicates: must be at least 1");
  const Kernel kernel = make_kernel(d, cfg.tau);
  const std::uint64_t blocks = (cfg.replicates + kBlockSize - 1) / kBlockSize;
  std::vector<BlockTally> tallies(blocks);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t offset = static_cast<std::uint64_t>(b) * kBlockSize;
    const std::uint64_t count = std::min(kBlockSize, cfg.replicates - offset);
    tallies[b] = run_block(kernel, cfg.seed, static_cast<std::uint64_t>(b), count);
  }

  // Deterministic reduction in block order.
  std::vector<std::uint64_t> reject(kernel.stages, 0), accept(kernel.stages, 0);
  double sum_n = 0.0, sum_n2 = 0.0;
  for (const auto& t : tallies) {
    for (int l = 0; l < kernel.stages; ++l) {
      reject[l] += t.reject[l];
      accept[l] += t.accept[l];
    }
    sum_n += t.sum_n;
    sum_n2 += t.sum_n2;
  }

  SimResult r;
  r.replicates = cfg.replicates;
  r.arm0_per_stage = kernel.n0;
  r.arm1_per_stage = kernel.n1;
  const double reps = static_cast<double>(cfg.replicates);
  r.reject_at.resize(kernel.stages);
  r.accept_at.resize(kernel.stages);
  r.stage_stop_freq.resize(kernel.stages);
  r.se_stage_stop.resize(kernel.stages);
  for (int l = 0; l < kernel.stages; ++l) {
    r.reject_at[l] = reject[l] / reps;
    r.accept_at[l] = accept[l] / reps;
    r.stage_stop_freq[l] = r.reject_at[l] + r.accept_at[l];
    r.se_stage_stop[l] =
        std::sqrt(r.stage_stop_freq[l] * (1.0 - r.stage_stop_freq[l]) / reps);
    r.reject_rate += r.reject_at[l];
    r.accept_rate += r.accept_at[l];
  }
  r.mean_n = sum_n / reps;
  r.se_reject = std::sqrt(r.reject_rate * (1.0 - r.reject_rate) / reps);
  r.se_accept = std::sqrt(r.accept_rate * (1.0 - r.accept_rate) / reps);
  const double var_n = std::max(0.0, sum_n2 / reps - r.mean_n * r.mean_n);
  r.se_mean_n = std::sqrt(var_n / reps);
  return r;
}

}  // namespace

InformationSchedule integer_size_schedule(const Design& d) {
  const Kernel k = make_kernel(d, 0.0);
  InformationSchedule s;
  s.group_size = static_cast<double>(k.n0);
  s.info.resize(k.stages);
  s.cumulative_n = k.stage_total;
  for (int l = 0; l < k.stages; ++l) s.info[l] = k.sqrt_info[l] * k.sqrt_info[l];
  return s;
}

SimResult simulate_trials(const Design& design, const SimConfig& config) {
  return run(design, config, true);
}

SimResult simulate_trials_serial(const Design& design, const SimConfig& config) {
  return run(design, config, false);
}

}  // namespace gsd
