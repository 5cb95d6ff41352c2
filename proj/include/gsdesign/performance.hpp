#pragma once

#include <utility>
#include <vector>

#include "gsdesign/designs.hpp"

namespace gsd {

/// The design performance sextuple:
/// (P(rej|0), E(N|0), P(rej|delta), E(N|delta), max_tau E(N|tau), max N).
struct PerformanceSummary {
  double p_reject_null = 0.0;
  double ess_null = 0.0;
  double p_reject_alt = 0.0;
  double ess_alt = 0.0;
  double max_ess = 0.0;
  double max_n = 0.0;
};

struct PerformanceCurve {
  std::vector<double> tau;
  std::vector<double> power;
  std::vector<double> ess;
};

/// Default tau range: [-2 delta, 2 delta] two-sided, [-delta, 2 delta] one-sided.
std::pair<double, double> default_tau_range(const Design& design);

PerformanceSummary summarize(const Design& design, const QuadratureOptions& quad = {});

/// Power and expected sample size on a uniform tau grid. Grid points are
/// independent and evaluated in parallel when OpenMP is enabled; output is
/// assembled in grid order either way.
PerformanceCurve curves(const Design& design, double tau_lo, double tau_hi, int points,
                        const QuadratureOptions& quad = {}, bool parallel = true);

}  // namespace gsd
