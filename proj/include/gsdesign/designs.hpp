#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsdesign/boundaries.hpp"
#include "gsdesign/canonical.hpp"
#include "gsdesign/integrate.hpp"

namespace gsd {

enum class Family {
  HaybittlePeto,
  WangTsiatis,
  InnerWedge,
  DoubleTriangular,
  PowerFamily,
  Triangular,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);
bool family_uses_omega(Family f);
bool family_is_two_sided(Family f);

/// A fully solved design: inputs, calibrated boundaries, exact group size,
/// information schedule, covariance, family constants, and the attained
/// operating characteristics recomputed through the integration engine.
struct Design {
  Family family = Family::HaybittlePeto;
  TrialParams params;
  BoundarySet bounds;
  InformationSchedule schedule;
  CovarianceMatrix cov;
  std::vector<std::pair<std::string, double>> constants;
  double attained_alpha = 0.0;
  double attained_power = 0.0;

  double max_total_sample_size() const { return schedule.cumulative_n.back(); }
};

/// Test-only switches documenting two discrepancies in the published
/// Whitehead closed forms. The defaults are the dimensionally consistent
/// variants; the printed ones are kept so the gap can be demonstrated.
struct WhiteheadOptions {
  /// Scale I_L by 1/delta_tilde (as printed) instead of 1/delta_tilde^2.
  bool printed_information_scale = false;
  /// One-sided triangular only: build delta_tilde from z_{1-alpha/2} (as
  /// printed) instead of z_{1-alpha}.
  bool printed_delta_tilde_quantile = false;
};

Design design_haybittle_peto(const TrialParams& params, const QuadratureOptions& quad = {});
Design design_wang_tsiatis(const TrialParams& params, const QuadratureOptions& quad = {});
Design design_inner_wedge(const TrialParams& params, const QuadratureOptions& quad = {});
Design design_double_triangular(const TrialParams& params, const QuadratureOptions& quad = {},
                                const WhiteheadOptions& wh = {});
Design design_power_family(const TrialParams& params, const QuadratureOptions& quad = {});
Design design_triangular(const TrialParams& params, const QuadratureOptions& quad = {},
                         const WhiteheadOptions& wh = {});

Design make_design(Family family, const TrialParams& params,
                   const QuadratureOptions& quad = {});

/// Group size of the fixed-sample (single-stage) design,
/// (z_alpha + z_{1-beta})^2 (sigma0^2 + sigma1^2 / r) / delta^2.
double fixed_sample_group_size(const TrialParams& params, bool two_sided);

}  // namespace gsd
