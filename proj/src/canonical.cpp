#include "gsdesign/canonical.hpp"

#include <cmath>

#include "gsdesign/errors.hpp"

namespace gsd {

void TrialParams::validate() const {
  if (stages < 1) throw ParameterError("stages: must be at least 1");
  if (!(delta > 0.0)) throw ParameterError("delta: must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha: must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw ParameterError("beta: must lie in (0, 1)");
  if (!(sigma0 > 0.0)) throw ParameterError("sigma0: must be positive");
  if (!(sigma1 > 0.0)) throw ParameterError("sigma1: must be positive");
  if (!(ratio > 0.0)) throw ParameterError("ratio: must be positive");
}

InformationSchedule information_schedule(const TrialParams& params, double n) {
  params.validate();
  if (!(n > 0.0)) throw ParameterError("n: must be positive");
  InformationSchedule s;
  s.group_size = n;
  s.info.resize(static_cast<std::size_t>(params.stages));
  s.cumulative_n.resize(s.info.size());
  const double per_stage_inv =
      params.sigma0 * params.sigma0 / n + params.sigma1 * params.sigma1 / (params.ratio * n);
  for (int l = 1; l <= params.stages; ++l) {
    s.info[l - 1] = static_cast<double>(l) / per_stage_inv;
    s.cumulative_n[l - 1] = l * n * (1.0 + params.ratio);
  }
  return s;
}

double group_size_from_information(const TrialParams& params, double info_target,
                                   int at_stage) {
  params.validate();
  if (!(info_target > 0.0)) throw ParameterError("info_target: must be positive");
  if (at_stage < 1 || at_stage > params.stages) {
    throw ParameterError("at_stage: must lie in [1, stages]");
  }
  const double unit = params.sigma0 * params.sigma0 +
                      params.sigma1 * params.sigma1 / params.ratio;
  return info_target * unit / static_cast<double>(at_stage);
}

CovarianceMatrix covariance(const InformationSchedule& schedule) {
  const std::size_t L = schedule.stages();
  CovarianceMatrix m;
  m.dim = L;
  m.values.assign(L * L, 0.0);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i; j < L; ++j) {
      const double v = std::sqrt(schedule.info[i] / schedule.info[j]);
      m.values[i * L + j] = v;
      m.values[j * L + i] = v;
    }
  }
  return m;
}

std::vector<double> mean_vector(const InformationSchedule& schedule, double tau) {
  std::vector<double> mu(schedule.stages());
  for (std::size_t l = 0; l < mu.size(); ++l) mu[l] = tau * std::sqrt(schedule.info[l]);
  return mu;
}

std::optional<std::vector<double>> cholesky_lower(const CovarianceMatrix& m) {
  const std::size_t n = m.dim;
  std::vector<double> low(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double sum = m(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= low[i * n + k] * low[j * n + k];
      if (i == j) {
        if (sum <= 0.0) return std::nullopt;
        low[i * n + i] = std::sqrt(sum);
      } else {
        low[i * n + j] = sum / low[j * n + j];
      }
    }
  }
  return low;
}

}  // namespace gsd
