#include "gsdesign/designs.hpp"

#include <cmath>
#include <optional>

#include "gsdesign/errors.hpp"
#include "gsdesign/normal.hpp"
#include "gsdesign/search.hpp"

namespace gsd {

const char* family_name(Family f) {
  switch (f) {
    case Family::HaybittlePeto: return "haybittle-peto";
    case Family::WangTsiatis: return "wang-tsiatis";
    case Family::InnerWedge: return "inner-wedge";
    case Family::DoubleTriangular: return "double-triangular";
    case Family::PowerFamily: return "power-family";
    case Family::Triangular: return "triangular";
  }
  return "unknown";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::HaybittlePeto, Family::WangTsiatis, Family::InnerWedge,
                   Family::DoubleTriangular, Family::PowerFamily, Family::Triangular}) {
    if (name == family_name(f)) return f;
  }
  throw ParameterError("family: unknown design family '" + name + "'");
}

bool family_uses_omega(Family f) {
  return f == Family::WangTsiatis || f == Family::InnerWedge || f == Family::PowerFamily;
}

bool family_is_two_sided(Family f) {
  return f != Family::PowerFamily && f != Family::Triangular;
}

double fixed_sample_group_size(const TrialParams& p, bool two_sided) {
  const double za = norm_quantile(two_sided ? 1.0 - p.alpha / 2.0 : 1.0 - p.alpha);
  const double zb = norm_quantile(1.0 - p.beta);
  const double zsum = za + zb;
  return zsum * zsum * (p.sigma0 * p.sigma0 + p.sigma1 * p.sigma1 / p.ratio) /
         (p.delta * p.delta);
}

namespace {

void require_omega(const TrialParams& p, Family f) {
  if (family_uses_omega(f)) {
    if (!p.omega) throw ParameterError("omega: required by this family");
  } else if (p.omega) {
    throw ParameterError(std::string("omega: not accepted by ") + family_name(f));
  }
}

// (l/L)^(omega - 1/2), l 1-based.
double shape_factor(int l, int L, double omega) {
  return std::pow(static_cast<double>(l) / L, omega - 0.5);
}

// Quadrature used inside calibration loops: same rule, no refinement pass.
QuadratureOptions search_quad(const QuadratureOptions& quad) {
  QuadratureOptions q = quad;
  q.refine = false;
  return q;
}

// Brent on a preferred bracket, widening once if the sign change lies outside.
RootResult calibrate_root(const std::function<double(double)>& f, double lo, double hi,
                          double wide_lo, double wide_hi, double tol) {
  try {
    return brent_root(f, lo, hi, tol);
  } catch (const BracketError&) {
    return brent_root(f, wide_lo, wide_hi, tol);
  }
}

Design finish_design(Family family, const TrialParams& p, BoundarySet bounds, double n,
                     std::vector<std::pair<std::string, double>> constants,
                     const QuadratureOptions& quad) {
  Design d;
  d.family = family;
  d.params = p;
  d.bounds = std::move(bounds);
  d.schedule = information_schedule(p, n);
  d.cov = covariance(d.schedule);
  d.constants = std::move(constants);
  d.bounds.validate();
  d.attained_alpha = rejection_probability(d.bounds, d.schedule, 0.0, quad);
  d.attained_power = rejection_probability(d.bounds, d.schedule, p.delta, quad);
  return d;
}

// Two-sided family with efficacy-only early stopping: boundaries from the
// supplied shape, final critical value solved for alpha (n-free under equal
// spacing), then the group size solved for power.
Design efficacy_only_two_sided(Family family, const TrialParams& p,
                               const std::function<BoundarySet(double)>& bounds_for,
                               double constant_lo, double constant_hi,
                               std::vector<std::pair<std::string, double>> (*constants_of)(double),
                               const QuadratureOptions& quad) {
  const auto sq = search_quad(quad);
  const auto unit_schedule = information_schedule(p, 1.0);
  auto alpha_err = [&](double c) {
    return rejection_probability(bounds_for(c), unit_schedule, 0.0, sq) - p.alpha;
  };
  const double c = calibrate_root(alpha_err, constant_lo, constant_hi, 1e-3, 20.0, 1e-12).root;
  const BoundarySet bounds = bounds_for(c);
  const double n_fixed = fixed_sample_group_size(p, true);
  auto power_err = [&](double n) {
    return rejection_probability(bounds, information_schedule(p, n), p.delta, sq) -
           (1.0 - p.beta);
  };
  const double n =
      calibrate_root(power_err, 1.0, 10.0 * n_fixed, 1e-6, 100.0 * n_fixed, 1e-9 * n_fixed)
          .root;
  Design d = finish_design(family, p, bounds, n, constants_of(c), quad);
  return d;
}

struct Candidate {
  BoundarySet bounds;
  InformationSchedule schedule;
};

// Shared 2D calibration for the inner-wedge and one-sided power families.
// The two constants pin I_L (hence n) and the boundary shapes; Nelder-Mead
// drives the squared error-rate residuals to zero.
Design two_constant_family(Family family, const TrialParams& p,
                           std::array<double, 2> start, const QuadratureOptions& quad) {
  const int L = p.stages;
  const double omega = *p.omega;
  const bool two_sided = family_is_two_sided(family);

  auto build = [&](double c_fut, double c_eff) -> std::optional<Candidate> {
    if (!(c_fut > 0.0) || !(c_eff > 0.0)) return std::nullopt;
    const double info_final = (c_fut + c_eff) * (c_fut + c_eff) / (p.delta * p.delta);
    const double n = group_size_from_information(p, info_final, L);
    Candidate cand;
    cand.schedule = information_schedule(p, n);
    cand.bounds.sidedness = two_sided ? Sidedness::TwoSided : Sidedness::OneSided;
    cand.bounds.efficacy.resize(L);
    cand.bounds.futility.resize(L);
    for (int l = 1; l <= L; ++l) {
      const double sf = shape_factor(l, L, omega);
      const double eff = c_eff * sf;
      double fut = p.delta * std::sqrt(cand.schedule.info[l - 1]) - c_fut * sf;
      if (two_sided && l < L) fut = std::max(fut, 0.0);
      cand.bounds.efficacy[l - 1] = eff;
      cand.bounds.futility[l - 1] = fut;
    }
    // The information formula forces coincidence at stage L; make it exact.
    cand.bounds.futility[L - 1] = cand.bounds.efficacy[L - 1];
    for (int l = 0; l + 1 < L; ++l) {
      if (!(cand.bounds.futility[l] < cand.bounds.efficacy[l])) return std::nullopt;
    }
    return cand;
  };

  const auto sq = search_quad(quad);
  auto objective = [&](double c_fut, double c_eff) {
    auto cand = build(c_fut, c_eff);
    if (!cand) {
      return 1e6 + std::fabs(c_fut) + std::fabs(c_eff);
    }
    const double a_hat = rejection_probability(cand->bounds, cand->schedule, 0.0, sq);
    const double pow_hat =
        rejection_probability(cand->bounds, cand->schedule, p.delta, sq);
    const double ra = a_hat - p.alpha;
    const double rb = pow_hat - (1.0 - p.beta);
    return ra * ra + rb * rb;
  };

  const SimplexResult res = nelder_mead(
      [&](double a, double b) { return objective(a, b); }, start, 1e-12, 1000);
  if (!res.converged) {
    throw ConvergenceError("two-dimensional boundary calibration did not converge");
  }
  const double c_fut = res.argmin[0];
  const double c_eff = res.argmin[1];
  auto cand = build(c_fut, c_eff);
  if (!cand) {
    throw InfeasibleShapeError("calibrated boundary constants yield a crossing shape");
  }
  std::vector<std::pair<std::string, double>> constants;
  if (two_sided) {
    constants = {{"C_a", c_fut}, {"C_r", c_eff}};
  } else {
    constants = {{"C_e", c_eff}, {"C_f", c_fut}};
  }
  constants.emplace_back("I_L", cand->schedule.info.back());
  return finish_design(family, p, std::move(cand->bounds), cand->schedule.group_size,
                       std::move(constants), quad);
}

struct WhiteheadShape {
  double delta_tilde;
  double info_final;
  double log_term;  // log(1/alpha) two-sided, log(1/(2 alpha)) one-sided
};

constexpr double kWhiteheadDrift = 0.583;  // continuity correction

WhiteheadShape whitehead_shape(const TrialParams& p, bool two_sided,
                               const WhiteheadOptions& wh) {
  const double za = (two_sided || wh.printed_delta_tilde_quantile)
                        ? norm_quantile(1.0 - p.alpha / 2.0)
                        : norm_quantile(1.0 - p.alpha);
  const double zb = norm_quantile(1.0 - p.beta);
  WhiteheadShape s;
  s.delta_tilde = 2.0 * za * p.delta / (za + zb);
  s.log_term = std::log(1.0 / (two_sided ? p.alpha : 2.0 * p.alpha));
  const double c = kWhiteheadDrift;
  const double L = static_cast<double>(p.stages);
  const double u = std::sqrt(4.0 * c * c / L + 8.0 * s.log_term) - 2.0 * c / std::sqrt(L);
  const double scale = wh.printed_information_scale ? s.delta_tilde
                                                    : s.delta_tilde * s.delta_tilde;
  s.info_final = u * u / scale;
  return s;
}

Design whitehead_design(Family family, const TrialParams& p, const QuadratureOptions& quad,
                        const WhiteheadOptions& wh) {
  const bool two_sided = family_is_two_sided(family);
  const WhiteheadShape s = whitehead_shape(p, two_sided, wh);
  const int L = p.stages;
  const double n = group_size_from_information(p, s.info_final, L);
  const auto schedule = information_schedule(p, n);

  BoundarySet bounds;
  bounds.sidedness = two_sided ? Sidedness::TwoSided : Sidedness::OneSided;
  bounds.efficacy.resize(L);
  bounds.futility.resize(L);
  const double dt = s.delta_tilde;
  const double c = kWhiteheadDrift;
  for (int l = 1; l <= L; ++l) {
    const double frac = static_cast<double>(l) / L;
    const double sqrt_info = std::sqrt(schedule.info[l - 1]);
    const double eff =
        ((2.0 / dt) * s.log_term - c * std::sqrt(s.info_final / L) +
         0.25 * dt * frac * s.info_final) / sqrt_info;
    double fut =
        ((-2.0 / dt) * s.log_term + c * std::sqrt(s.info_final / L) +
         0.75 * dt * frac * s.info_final) / sqrt_info;
    if (two_sided) fut = std::max(fut, 0.0);
    bounds.efficacy[l - 1] = eff;
    bounds.futility[l - 1] = fut;
  }
  bounds.futility[L - 1] = bounds.efficacy[L - 1];

  return finish_design(family, p, std::move(bounds), n,
                       {{"delta_tilde", dt}, {"I_L", s.info_final}}, quad);
}

}  // namespace

Design design_haybittle_peto(const TrialParams& p, const QuadratureOptions& quad) {
  p.validate();
  require_omega(p, Family::HaybittlePeto);
  const int L = p.stages;
  auto bounds_for = [L](double r_final) {
    BoundarySet b;
    b.sidedness = Sidedness::TwoSided;
    b.efficacy.assign(L, 3.0);
    b.efficacy[L - 1] = r_final;
    b.futility.assign(L, 0.0);
    b.futility[L - 1] = r_final;
    return b;
  };
  Design d = [&] {
    try {
      return efficacy_only_two_sided(
          Family::HaybittlePeto, p, bounds_for, 1.5, 10.0,
          +[](double c) {
            return std::vector<std::pair<std::string, double>>{{"r_L", c}};
          },
          quad);
    } catch (const BracketError&) {
      // The interim crossings at 3 already spend more than alpha.
      throw CalibrationError(
          "alpha target is unattainable with interim critical values fixed at 3");
    }
  }();
  if (L > 1 && d.bounds.efficacy[L - 1] > 3.0) {
    throw CalibrationError(
        "alpha target requires a final critical value above 3; the Haybittle-Peto "
        "boundary would be non-monotone");
  }
  return d;
}

Design design_wang_tsiatis(const TrialParams& p, const QuadratureOptions& quad) {
  p.validate();
  require_omega(p, Family::WangTsiatis);
  const int L = p.stages;
  const double omega = *p.omega;
  auto bounds_for = [L, omega](double c) {
    BoundarySet b;
    b.sidedness = Sidedness::TwoSided;
    b.efficacy.resize(L);
    b.futility.assign(L, 0.0);
    for (int l = 1; l <= L; ++l) b.efficacy[l - 1] = c * shape_factor(l, L, omega);
    b.futility[L - 1] = b.efficacy[L - 1];
    return b;
  };
  return efficacy_only_two_sided(
      Family::WangTsiatis, p, bounds_for, 1.5, 10.0,
      +[](double c) {
        return std::vector<std::pair<std::string, double>>{{"C_WT", c}};
      },
      quad);
}

Design design_inner_wedge(const TrialParams& p, const QuadratureOptions& quad) {
  p.validate();
  require_omega(p, Family::InnerWedge);
  // L = 1 exact solution (C_a, C_r) = (z_{1-beta}, z_{1-alpha/2}).
  const std::array<double, 2> start{norm_quantile(1.0 - p.beta),
                                    norm_quantile(1.0 - p.alpha / 2.0)};
  return two_constant_family(Family::InnerWedge, p, start, quad);
}

Design design_power_family(const TrialParams& p, const QuadratureOptions& quad) {
  p.validate();
  require_omega(p, Family::PowerFamily);
  const std::array<double, 2> start{norm_quantile(1.0 - p.beta),
                                    norm_quantile(1.0 - p.alpha)};
  return two_constant_family(Family::PowerFamily, p, start, quad);
}

Design design_double_triangular(const TrialParams& p, const QuadratureOptions& quad,
                                const WhiteheadOptions& wh) {
  p.validate();
  require_omega(p, Family::DoubleTriangular);
  return whitehead_design(Family::DoubleTriangular, p, quad, wh);
}

Design design_triangular(const TrialParams& p, const QuadratureOptions& quad,
                         const WhiteheadOptions& wh) {
  p.validate();
  require_omega(p, Family::Triangular);
  return whitehead_design(Family::Triangular, p, quad, wh);
}

Design make_design(Family family, const TrialParams& params, const QuadratureOptions& quad) {
  switch (family) {
    case Family::HaybittlePeto: return design_haybittle_peto(params, quad);
    case Family::WangTsiatis: return design_wang_tsiatis(params, quad);
    case Family::InnerWedge: return design_inner_wedge(params, quad);
    case Family::DoubleTriangular: return design_double_triangular(params, quad);
    case Family::PowerFamily: return design_power_family(params, quad);
    case Family::Triangular: return design_triangular(params, quad);
  }
  throw ParameterError("family: unknown design family");
}

}  // namespace gsd
