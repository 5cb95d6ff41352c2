#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace gsd {

/// User-facing design inputs for a two-arm group sequential trial.
struct TrialParams {
  int stages = 3;                ///< number of planned analyses, L
  double delta = 0.2;            ///< clinically relevant difference
  double alpha = 0.05;           ///< type-I error rate
  double beta = 0.2;             ///< type-II error rate
  double sigma0 = 1.0;           ///< arm-0 outcome standard deviation
  double sigma1 = 1.0;           ///< arm-1 outcome standard deviation
  double ratio = 1.0;            ///< arm-1 : arm-0 per-stage allocation ratio
  std::optional<double> omega;   ///< boundary shape, only for families that use it

  /// Throws ParameterError naming the offending field.
  void validate() const;
};

/// Per-stage information levels and cumulative enrolment for a given group size.
struct InformationSchedule {
  double group_size = 0.0;            ///< arm-0 patients per stage (real-valued)
  std::vector<double> info;           ///< I_1..I_L
  std::vector<double> cumulative_n;   ///< total patients (both arms) through stage l

  std::size_t stages() const { return info.size(); }
};

/// Covariance of the stage-wise test statistics, (I_{l1}/I_{l2})^{1/2} for l1 <= l2.
struct CovarianceMatrix {
  std::size_t dim = 0;
  std::vector<double> values;  // row-major dim x dim

  double operator()(std::size_t i, std::size_t j) const { return values[i * dim + j]; }
};

/// Information levels I_l = (sigma0^2/(l n) + sigma1^2/(r l n))^{-1} and N_l = l n (1 + r).
InformationSchedule information_schedule(const TrialParams& params, double n);

/// Inverts the information formula: n such that I_{at_stage} equals target.
/// at_stage is 1-based.
double group_size_from_information(const TrialParams& params, double info_target,
                                   int at_stage);

CovarianceMatrix covariance(const InformationSchedule& schedule);

/// E(Z_l) = tau * sqrt(I_l).
std::vector<double> mean_vector(const InformationSchedule& schedule, double tau);

/// Lower Cholesky factor; empty result when the matrix is not positive definite.
std::optional<std::vector<double>> cholesky_lower(const CovarianceMatrix& m);

}  // namespace gsd
