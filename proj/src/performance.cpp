#include "gsdesign/performance.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "gsdesign/errors.hpp"
#include "gsdesign/search.hpp"

namespace gsd {

std::pair<double, double> default_tau_range(const Design& d) {
  const double delta = d.params.delta;
  if (d.bounds.sidedness == Sidedness::TwoSided) return {-2.0 * delta, 2.0 * delta};
  return {-delta, 2.0 * delta};
}

PerformanceSummary summarize(const Design& d, const QuadratureOptions& quad) {
  PerformanceSummary s;
  s.p_reject_null = d.attained_alpha;
  s.ess_null = expected_sample_size(d.bounds, d.schedule, 0.0, quad);
  s.p_reject_alt = d.attained_power;
  s.ess_alt = expected_sample_size(d.bounds, d.schedule, d.params.delta, quad);
  s.max_n = d.max_total_sample_size();

  auto ess_at = [&](double tau) {
    return expected_sample_size(d.bounds, d.schedule, tau, quad);
  };
  // E(N|tau) can peak on either side of zero for two-sided designs; a coarse
  // scan picks the bracket before the golden-section refinement.
  const auto [lo, hi] = default_tau_range(d);
  constexpr int kScanPoints = 21;
  double best_val = -1.0;
  int best_idx = 0;
  std::vector<double> grid(kScanPoints), vals(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = lo + (hi - lo) * i / (kScanPoints - 1);
    vals[i] = ess_at(grid[i]);
    if (vals[i] > best_val) {
      best_val = vals[i];
      best_idx = i;
    }
  }
  const double blo = grid[std::max(0, best_idx - 1)];
  const double bhi = grid[std::min(kScanPoints - 1, best_idx + 1)];
  const auto [tau_star, max_ess] = golden_max(ess_at, blo, bhi, 1e-6 * (hi - lo));
  (void)tau_star;
  s.max_ess = std::max(max_ess, best_val);
  return s;
}

PerformanceCurve curves(const Design& d, double tau_lo, double tau_hi, int points,
                        const QuadratureOptions& quad, bool parallel) {
  if (!(tau_lo < tau_hi)) throw ParameterError("tau range: requires tau_lo < tau_hi");
  if (points < 2) throw ParameterError("tau points: must be at least 2");

  PerformanceCurve c;
  c.tau.resize(points);
  c.power.resize(points);
  c.ess.resize(points);
  for (int i = 0; i < points; ++i) {
    c.tau[i] = (i == points - 1) ? tau_hi : tau_lo + (tau_hi - tau_lo) * i / (points - 1);
  }

  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < points; ++i) {
    try {
      const auto probs = stopping_probabilities(d.bounds, d.schedule, c.tau[i], quad);
      double ess = 0.0;
      for (std::size_t l = 0; l < d.schedule.stages(); ++l) {
        ess += (probs.reject_at[l] + probs.accept_at[l]) * d.schedule.cumulative_n[l];
      }
      c.power[i] = probs.rejection();
      c.ess[i] = ess;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return c;
}

}  // namespace gsd
