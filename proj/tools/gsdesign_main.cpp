#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsdesign/designs.hpp"
#include "gsdesign/errors.hpp"
#include "gsdesign/performance.hpp"
#include "gsdesign/report.hpp"
#include "gsdesign/serialize.hpp"
#include "gsdesign/simulate.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct SharedOptions {
  int stages = 3;
  double delta = 0.2;
  double alpha = 0.05;
  double beta = 0.2;
  std::vector<double> sigma;
  double ratio = 1.0;
  double omega = 0.5;
  bool performance = false;
  double tau_min = 0.0;
  double tau_max = 0.0;
  bool tau_range_set = false;
  int tau_points = 101;
  std::string format = "text";
  std::string out_path;
  std::string svg_path;
};

struct CommandContext {
  SharedOptions opts;
  CLI::Option* omega_opt = nullptr;
  CLI::Option* tau_min_opt = nullptr;
  CLI::Option* tau_max_opt = nullptr;
};

void add_shared_flags(CLI::App* cmd, CommandContext& ctx, bool with_params) {
  auto& o = ctx.opts;
  if (with_params) {
    cmd->add_option("--stages,-l", o.stages, "number of analyses L")->capture_default_str();
    cmd->add_option("--delta", o.delta, "clinically relevant difference")
        ->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "type-I error rate")->capture_default_str();
    cmd->add_option("--beta", o.beta, "type-II error rate")->capture_default_str();
    cmd->add_option("--sigma", o.sigma,
                    "outcome standard deviation(s); one value means sigma0 = sigma1")
        ->delimiter(',')
        ->expected(1, 2);
    cmd->add_option("--ratio", o.ratio, "arm-1 : arm-0 allocation ratio")
        ->capture_default_str();
    ctx.omega_opt =
        cmd->add_option("--omega", o.omega, "boundary shape parameter")->capture_default_str();
    cmd->add_flag("--performance", o.performance,
                  "compute the performance summary and power/ESS curves");
  }
  ctx.tau_min_opt = cmd->add_option("--tau-min", o.tau_min, "curve grid lower end");
  ctx.tau_max_opt = cmd->add_option("--tau-max", o.tau_max, "curve grid upper end");
  cmd->add_option("--tau-points", o.tau_points, "curve grid size")->capture_default_str();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "write output to PATH instead of stdout");
  cmd->add_option("--svg", o.svg_path, "write a power/ESS line chart to PATH");
}

void write_output(const SharedOptions& o, const std::string& content,
                  const std::vector<std::string>& argv_copy) {
  if (o.out_path.empty()) {
    std::cout << content;
    return;
  }
  {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw gsd::ParameterError("--out: cannot open '" + o.out_path + "' for writing");
    f << content;
  }
  // Provenance lives in a sidecar so the data file itself stays reproducible.
  nlohmann::ordered_json meta;
  meta["tool"] = "gsdesign";
  meta["version"] = kToolVersion;
  meta["schema_version"] = gsd::kSchemaVersion;
  meta["command"] = argv_copy;
  std::ofstream mf(o.out_path + ".meta.json", std::ios::binary);
  mf << gsd::dump_json(meta);
}

gsd::TrialParams params_from(const SharedOptions& o, bool with_omega) {
  gsd::TrialParams p;
  p.stages = o.stages;
  p.delta = o.delta;
  p.alpha = o.alpha;
  p.beta = o.beta;
  if (o.sigma.empty()) {
    p.sigma0 = p.sigma1 = 1.0;
  } else if (o.sigma.size() == 1) {
    p.sigma0 = p.sigma1 = o.sigma[0];
  } else {
    p.sigma0 = o.sigma[0];
    p.sigma1 = o.sigma[1];
  }
  p.ratio = o.ratio;
  if (with_omega) p.omega = o.omega;
  return p;
}

int run_family(gsd::Family family, const CommandContext& ctx,
               const std::vector<std::string>& argv_copy) {
  const auto& o = ctx.opts;
  if (!gsd::family_uses_omega(family) && ctx.omega_opt && ctx.omega_opt->count() > 0) {
    std::cerr << "omega not accepted by " << gsd::family_name(family) << "\n";
    return 2;
  }
  const gsd::TrialParams params = params_from(o, gsd::family_uses_omega(family));

  if (o.format == "text" && o.out_path.empty()) {
    std::cout << "solving " << gsd::family_name(family) << " boundaries and group size...\n";
  }
  const gsd::Design design = gsd::make_design(family, params);
  const gsd::PerformanceSummary perf = gsd::summarize(design);

  std::optional<gsd::PerformanceCurve> curve;
  const bool need_curve = o.performance || o.format == "csv" || !o.svg_path.empty();
  if (need_curve) {
    auto [lo, hi] = gsd::default_tau_range(design);
    if (ctx.tau_min_opt->count() > 0) lo = o.tau_min;
    if (ctx.tau_max_opt->count() > 0) hi = o.tau_max;
    curve = gsd::curves(design, lo, hi, o.tau_points);
  }

  std::string content;
  if (o.format == "json") {
    content = gsd::dump_json(
        gsd::design_to_json(design, &perf, curve ? &*curve : nullptr));
  } else if (o.format == "csv") {
    content = gsd::curve_csv(*curve);
  } else {
    content = gsd::text_report(design, &perf);
    if (curve && o.performance) {
      content += "Performance curves: " + std::to_string(curve->tau.size()) +
                 " grid points on [" + std::to_string(curve->tau.front()) + ", " +
                 std::to_string(curve->tau.back()) + "] (emit with --format csv)\n";
    }
  }
  write_output(o, content, argv_copy);
  if (!o.svg_path.empty()) {
    std::ofstream f(o.svg_path, std::ios::binary);
    if (!f) throw gsd::ParameterError("--svg: cannot open '" + o.svg_path + "' for writing");
    f << gsd::curve_svg(*curve);
  }
  return 0;
}

nlohmann::ordered_json load_document(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw gsd::ParameterError("--design: cannot read '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return nlohmann::ordered_json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw gsd::StructuralError(std::string("--design: invalid JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> argv_copy(argv, argv + argc);
  CLI::App app{"Group sequential trial design calculator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  struct FamilyCommand {
    gsd::Family family;
    CommandContext ctx;
  };
  std::vector<std::unique_ptr<FamilyCommand>> family_cmds;
  for (gsd::Family f :
       {gsd::Family::HaybittlePeto, gsd::Family::WangTsiatis, gsd::Family::InnerWedge,
        gsd::Family::DoubleTriangular, gsd::Family::PowerFamily, gsd::Family::Triangular}) {
    auto fc = std::make_unique<FamilyCommand>();
    fc->family = f;
    CLI::App* cmd = app.add_subcommand(gsd::family_name(f),
                                       std::string("design a ") + gsd::family_name(f) +
                                           " group sequential trial");
    add_shared_flags(cmd, fc->ctx, true);
    family_cmds.push_back(std::move(fc));
  }

  // simulate
  CommandContext sim_ctx;
  std::string sim_design_path;
  std::uint64_t sim_reps = 1'000'000;
  std::uint64_t sim_seed = 1;
  double sim_tau = 0.0;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo check of a saved design");
  sim_cmd->add_option("--design", sim_design_path, "design document JSON")->required();
  sim_cmd->add_option("--reps", sim_reps, "number of replicates")->capture_default_str();
  sim_cmd->add_option("--tau", sim_tau, "true effect size")->capture_default_str();
  sim_cmd->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--format", sim_ctx.opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sim_cmd->add_option("--out", sim_ctx.opts.out_path, "write output to PATH");

  // curves
  CommandContext curves_ctx;
  std::string curves_design_path;
  CLI::App* curves_cmd =
      app.add_subcommand("curves", "power/ESS curves of a saved design");
  curves_cmd->add_option("--design", curves_design_path, "design document JSON")->required();
  add_shared_flags(curves_cmd, curves_ctx, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    for (const auto& fc : family_cmds) {
      CLI::App* cmd = app.get_subcommand(gsd::family_name(fc->family));
      if (cmd->parsed()) return run_family(fc->family, fc->ctx, argv_copy);
    }
    if (sim_cmd->parsed()) {
      const gsd::Design design = gsd::design_from_json(load_document(sim_design_path));
      gsd::SimConfig cfg;
      cfg.replicates = sim_reps;
      cfg.seed = sim_seed;
      cfg.tau = sim_tau;
      const gsd::SimResult result = gsd::simulate_trials(design, cfg);
      const std::string content = (sim_ctx.opts.format == "json")
                                      ? gsd::dump_json(gsd::sim_result_to_json(result, cfg))
                                      : gsd::text_report(result, cfg);
      write_output(sim_ctx.opts, content, argv_copy);
      return 0;
    }
    if (curves_cmd->parsed()) {
      const auto& o = curves_ctx.opts;
      const gsd::Design design = gsd::design_from_json(load_document(curves_design_path));
      auto [lo, hi] = gsd::default_tau_range(design);
      if (curves_ctx.tau_min_opt->count() > 0) lo = o.tau_min;
      if (curves_ctx.tau_max_opt->count() > 0) hi = o.tau_max;
      const gsd::PerformanceCurve curve = gsd::curves(design, lo, hi, o.tau_points);
      std::string content;
      if (o.format == "json") {
        nlohmann::ordered_json j;
        j["tau"] = curve.tau;
        j["power"] = curve.power;
        j["ess"] = curve.ess;
        content = gsd::dump_json(j);
      } else {
        content = gsd::curve_csv(curve);
      }
      write_output(o, content, argv_copy);
      if (!o.svg_path.empty()) {
        std::ofstream f(o.svg_path, std::ios::binary);
        f << gsd::curve_svg(curve);
      }
      return 0;
    }
  } catch (const gsd::ParameterError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const gsd::StructuralError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 2;
}
