#include "gsdesign/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "gsdesign/errors.hpp"
#include "gsdesign/normal.hpp"
#include "gsdesign/quadrature.hpp"

namespace gsd {

double StoppingProbabilities::rejection() const {
  return std::accumulate(reject_at.begin(), reject_at.end(), 0.0);
}

double StoppingProbabilities::acceptance() const {
  return std::accumulate(accept_at.begin(), accept_at.end(), 0.0);
}

namespace {

using Interval = std::pair<double, double>;

// Continuation region at a non-final stage. A two-sided futility bound of
// zero means the accept region is empty and the region is one interval.
std::vector<Interval> continuation_intervals(const BoundarySet& b, std::size_t l) {
  if (b.sidedness == Sidedness::TwoSided) {
    const double a = b.futility[l];
    const double r = b.efficacy[l];
    if (a <= 0.0) return {{-r, r}};
    return {{-r, -a}, {a, r}};
  }
  return {{b.futility[l], b.efficacy[l]}};
}

double crossing_mass(const BoundarySet& b, std::size_t l, double mean, double sd) {
  if (b.sidedness == Sidedness::TwoSided) {
    const double r = b.efficacy[l];
    return norm_cdf((-r - mean) / sd) + 1.0 - norm_cdf((r - mean) / sd);
  }
  return 1.0 - norm_cdf((b.efficacy[l] - mean) / sd);
}

double accept_mass(const BoundarySet& b, std::size_t l, double mean, double sd,
                   bool final_stage) {
  if (b.sidedness == Sidedness::TwoSided) {
    const double a = final_stage ? b.efficacy[l] : b.futility[l];
    if (a <= 0.0) return 0.0;
    return norm_cdf((a - mean) / sd) - norm_cdf((-a - mean) / sd);
  }
  const double f = final_stage ? b.efficacy[l] : b.futility[l];
  return norm_cdf((f - mean) / sd);
}

struct Pass {
  std::vector<double> reject;
  std::vector<double> accept;
};

Pass run_pass(const BoundarySet& bounds, const InformationSchedule& schedule,
              double tau, int nodes) {
  const std::size_t L = schedule.stages();
  Pass out;
  out.reject.assign(L, 0.0);
  out.accept.assign(L, 0.0);

  const auto& rule = gauss_legendre(nodes);

  // Stage 1: Z_1 ~ N(tau sqrt(I_1), 1).
  const double m1 = tau * std::sqrt(schedule.info[0]);
  out.reject[0] = crossing_mass(bounds, 0, m1, 1.0);
  out.accept[0] = accept_mass(bounds, 0, m1, 1.0, L == 1);
  if (L == 1) return out;

  // Sub-density of Z_1 on its continuation region, carried as node masses.
  std::vector<double> x, g;
  for (const auto& [lo, hi] : continuation_intervals(bounds, 0)) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    for (int i = 0; i < nodes; ++i) {
      const double xi = mid + half * rule.nodes[i];
      x.push_back(xi);
      g.push_back(half * rule.weights[i] * norm_pdf(xi - m1));
    }
  }

  std::vector<double> means(x.size());
  for (std::size_t l = 1; l < L; ++l) {
    const double i_prev = schedule.info[l - 1];
    const double i_cur = schedule.info[l];
    const double sqrt_cur = std::sqrt(i_cur);
    const double sd = std::sqrt((i_cur - i_prev) / i_cur);
    means.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      means[i] = (x[i] * std::sqrt(i_prev) + tau * (i_cur - i_prev)) / sqrt_cur;
    }
    const bool final_stage = (l + 1 == L);
    double rej = 0.0, acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      rej += g[i] * crossing_mass(bounds, l, means[i], sd);
      acc += g[i] * accept_mass(bounds, l, means[i], sd, final_stage);
    }
    out.reject[l] = rej;
    out.accept[l] = acc;
    if (final_stage) break;

    std::vector<double> y, h;
    for (const auto& [lo, hi] : continuation_intervals(bounds, l)) {
      const double half = 0.5 * (hi - lo);
      const double mid = 0.5 * (hi + lo);
      for (int j = 0; j < nodes; ++j) {
        const double yj = mid + half * rule.nodes[j];
        double dens = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          dens += g[i] * norm_pdf((yj - means[i]) / sd);
        }
        y.push_back(yj);
        h.push_back(half * rule.weights[j] * dens / sd);
      }
    }
    x = std::move(y);
    g = std::move(h);
  }
  return out;
}

}  // namespace

StoppingProbabilities stopping_probabilities(const BoundarySet& bounds,
                                             const InformationSchedule& schedule,
                                             double tau, const QuadratureOptions& opts) {
  if (bounds.stages() != schedule.stages()) {
    throw StructuralError("boundary set and information schedule differ in length");
  }
  bounds.validate();

  StoppingProbabilities result;
  Pass pass = run_pass(bounds, schedule, tau, opts.nodes_per_interval);
  if (opts.refine) {
    Pass fine = run_pass(bounds, schedule, tau, 2 * opts.nodes_per_interval);
    double err = 0.0;
    for (std::size_t l = 0; l < pass.reject.size(); ++l) {
      err = std::max(err, std::fabs(fine.reject[l] - pass.reject[l]));
      err = std::max(err, std::fabs(fine.accept[l] - pass.accept[l]));
    }
    if (err > opts.abs_tol) {
      throw NumericalError("quadrature did not converge to the requested tolerance", err);
    }
    result.error_estimate = err;
    pass = std::move(fine);
  }
  result.reject_at = std::move(pass.reject);
  result.accept_at = std::move(pass.accept);
  return result;
}

double rejection_probability(const BoundarySet& bounds,
                             const InformationSchedule& schedule, double tau,
                             const QuadratureOptions& opts) {
  return stopping_probabilities(bounds, schedule, tau, opts).rejection();
}

double expected_sample_size(const BoundarySet& bounds,
                            const InformationSchedule& schedule, double tau,
                            const QuadratureOptions& opts) {
  const auto probs = stopping_probabilities(bounds, schedule, tau, opts);
  double ess = 0.0;
  for (std::size_t l = 0; l < schedule.stages(); ++l) {
    ess += (probs.reject_at[l] + probs.accept_at[l]) * schedule.cumulative_n[l];
  }
  return ess;
}

}  // namespace gsd
