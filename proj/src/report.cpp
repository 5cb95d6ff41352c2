#include "gsdesign/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace gsd {

namespace {

const char* family_title(Family f) {
  switch (f) {
    case Family::HaybittlePeto: return "Haybittle-Peto design";
    case Family::WangTsiatis: return "Wang-Tsiatis design";
    case Family::InnerWedge: return "power-family inner wedge design";
    case Family::DoubleTriangular: return "double triangular test";
    case Family::PowerFamily: return "one-sided power-family design";
    case Family::Triangular: return "triangular test";
  }
  return "design";
}

}  // namespace

std::string text_report(const Design& d, const PerformanceSummary* perf) {
  const bool two_sided = d.bounds.sidedness == Sidedness::TwoSided;
  std::ostringstream os;
  os << std::fixed;
  os << "Group sequential " << family_title(d.family) << "\n";
  os << "Hypotheses: H0: tau " << (two_sided ? "= 0  vs  H1: tau != 0" : "<= 0  vs  H1: tau > 0")
     << "   (tau = mu1 - mu0)\n";
  os << std::setprecision(3);
  os << "Targets: " << (two_sided ? "two" : "one") << "-sided alpha = " << d.params.alpha
     << ", power = " << 1.0 - d.params.beta << " at delta = " << d.params.delta << "\n";
  os << "Assumed: sigma0 = " << d.params.sigma0 << ", sigma1 = " << d.params.sigma1
     << ", allocation ratio r = " << d.params.ratio << "\n";
  if (!d.constants.empty()) {
    os << std::setprecision(6) << "Constants:";
    for (const auto& [name, value] : d.constants) os << " " << name << " = " << value;
    os << "\n";
  }
  os << std::setprecision(1);
  os << "Stages: " << d.params.stages << ", exact group size n = " << d.schedule.group_size
     << "\n";
  os << "Per-stage patients: arm 0: "
     << static_cast<long long>(std::ceil(d.schedule.group_size)) << ", arm 1: "
     << static_cast<long long>(std::ceil(d.params.ratio * d.schedule.group_size)) << "\n";
  os << std::setprecision(6);
  os << "Boundaries:\n";
  os << "  stage  information  " << (two_sided ? "     a_l" : "     f_l")
     << (two_sided ? "      r_l" : "      e_l") << "\n";
  for (std::size_t l = 0; l < d.bounds.stages(); ++l) {
    os << "  " << std::setw(5) << l + 1 << "  " << std::setw(11) << d.schedule.info[l] << "  "
       << std::setw(8) << d.bounds.futility[l] << " " << std::setw(8) << d.bounds.efficacy[l]
       << "\n";
  }
  os << std::setprecision(3);
  os << "Attained operating characteristics: alpha = " << d.attained_alpha
     << ", power = " << d.attained_power << "\n";
  if (perf) {
    os << std::setprecision(1);
    os << "Expected sample size under tau = 0:      " << perf->ess_null << "\n";
    os << "Expected sample size under tau = delta:  " << perf->ess_alt << "\n";
    os << "Maximum expected sample size over tau:   " << perf->max_ess << "\n";
    os << "Maximum possible sample size:            " << perf->max_n << "\n";
  }
  return os.str();
}

std::string text_report(const SimResult& r, const SimConfig& cfg) {
  std::ostringstream os;
  os << "Monte Carlo simulation: " << r.replicates << " replicates, seed " << cfg.seed
     << ", tau = " << cfg.tau << "\n";
  os << "Integer per-stage sizes: arm 0: " << r.arm0_per_stage << ", arm 1: "
     << r.arm1_per_stage << "\n";
  os << std::fixed << std::setprecision(5);
  os << "Reject rate: " << r.reject_rate << " (se " << r.se_reject << ")\n";
  os << "Accept rate: " << r.accept_rate << " (se " << r.se_accept << ")\n";
  os << std::setprecision(1);
  os << "Mean sample size: " << r.mean_n << " (se " << std::setprecision(3) << r.se_mean_n
     << ")\n";
  os << std::setprecision(5);
  os << "Stage stop frequencies (reject / accept):\n";
  for (std::size_t l = 0; l < r.stage_stop_freq.size(); ++l) {
    os << "  stage " << l + 1 << ": " << r.stage_stop_freq[l] << "  (" << r.reject_at[l]
       << " / " << r.accept_at[l] << ")\n";
  }
  return os.str();
}

}  // namespace gsd
