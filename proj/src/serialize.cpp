#include "gsdesign/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gsdesign/errors.hpp"

namespace gsd {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

nlohmann::ordered_json design_to_json(const Design& d, const PerformanceSummary* perf,
                                      const PerformanceCurve* curve) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["family"] = family_name(d.family);

  nlohmann::ordered_json inputs;
  inputs["stages"] = d.params.stages;
  inputs["delta"] = d.params.delta;
  inputs["alpha"] = d.params.alpha;
  inputs["beta"] = d.params.beta;
  inputs["sigma0"] = d.params.sigma0;
  inputs["sigma1"] = d.params.sigma1;
  inputs["ratio"] = d.params.ratio;
  if (d.params.omega) inputs["omega"] = *d.params.omega;
  doc["inputs"] = inputs;

  nlohmann::ordered_json out;
  out["group_size"] = d.schedule.group_size;
  out["arm0_per_stage"] =
      static_cast<std::int64_t>(std::ceil(d.schedule.group_size));
  out["arm1_per_stage"] =
      static_cast<std::int64_t>(std::ceil(d.params.ratio * d.schedule.group_size));
  const bool two_sided = d.bounds.sidedness == Sidedness::TwoSided;
  nlohmann::ordered_json bounds;
  bounds[two_sided ? "a" : "f"] = d.bounds.futility;
  bounds[two_sided ? "r" : "e"] = d.bounds.efficacy;
  out["boundaries"] = bounds;
  out["information"] = d.schedule.info;
  nlohmann::ordered_json cov = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.cov.dim; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < d.cov.dim; ++j) row.push_back(d.cov(i, j));
    cov.push_back(row);
  }
  out["covariance"] = cov;
  nlohmann::ordered_json constants;
  for (const auto& [name, value] : d.constants) constants[name] = value;
  out["constants"] = constants;
  out["attained_alpha"] = d.attained_alpha;
  out["attained_power"] = d.attained_power;
  if (perf) {
    nlohmann::ordered_json p;
    p["p_reject_null"] = perf->p_reject_null;
    p["ess_null"] = perf->ess_null;
    p["p_reject_alt"] = perf->p_reject_alt;
    p["ess_alt"] = perf->ess_alt;
    p["max_ess"] = perf->max_ess;
    p["max_n"] = perf->max_n;
    out["performance"] = p;
  }
  if (curve) {
    nlohmann::ordered_json c;
    c["tau"] = curve->tau;
    c["power"] = curve->power;
    c["ess"] = curve->ess;
    out["curves"] = c;
  }
  doc["outputs"] = out;
  return doc;
}

Design design_from_json(const nlohmann::ordered_json& doc) {
  try {
    Design d;
    d.family = family_from_name(doc.at("family").get<std::string>());
    const auto& in = doc.at("inputs");
    d.params.stages = in.at("stages").get<int>();
    d.params.delta = in.at("delta").get<double>();
    d.params.alpha = in.at("alpha").get<double>();
    d.params.beta = in.at("beta").get<double>();
    d.params.sigma0 = in.at("sigma0").get<double>();
    d.params.sigma1 = in.at("sigma1").get<double>();
    d.params.ratio = in.at("ratio").get<double>();
    if (in.contains("omega")) d.params.omega = in.at("omega").get<double>();
    d.params.validate();

    const auto& out = doc.at("outputs");
    const double n = out.at("group_size").get<double>();
    const auto& bounds = out.at("boundaries");
    const bool two_sided = bounds.contains("a");
    d.bounds.sidedness = two_sided ? Sidedness::TwoSided : Sidedness::OneSided;
    d.bounds.futility =
        bounds.at(two_sided ? "a" : "f").get<std::vector<double>>();
    d.bounds.efficacy =
        bounds.at(two_sided ? "r" : "e").get<std::vector<double>>();
    d.bounds.validate();

    d.schedule.group_size = n;
    d.schedule.info = out.at("information").get<std::vector<double>>();
    d.schedule.cumulative_n.resize(d.schedule.info.size());
    for (std::size_t l = 0; l < d.schedule.info.size(); ++l) {
      d.schedule.cumulative_n[l] = (l + 1) * n * (1.0 + d.params.ratio);
    }
    const auto& cov = out.at("covariance");
    d.cov.dim = cov.size();
    d.cov.values.reserve(d.cov.dim * d.cov.dim);
    for (const auto& row : cov) {
      for (const auto& v : row) d.cov.values.push_back(v.get<double>());
    }
    for (const auto& [name, value] : out.at("constants").items()) {
      d.constants.emplace_back(name, value.get<double>());
    }
    d.attained_alpha = out.at("attained_alpha").get<double>();
    d.attained_power = out.at("attained_power").get<double>();
    if (d.bounds.stages() != d.schedule.stages()) {
      throw StructuralError("design document: boundary and information lengths differ");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("design document: ") + e.what());
  }
}

bool performance_from_json(const nlohmann::ordered_json& doc, PerformanceSummary& out) {
  const auto& o = doc.at("outputs");
  if (!o.contains("performance")) return false;
  const auto& p = o.at("performance");
  out.p_reject_null = p.at("p_reject_null").get<double>();
  out.ess_null = p.at("ess_null").get<double>();
  out.p_reject_alt = p.at("p_reject_alt").get<double>();
  out.ess_alt = p.at("ess_alt").get<double>();
  out.max_ess = p.at("max_ess").get<double>();
  out.max_n = p.at("max_n").get<double>();
  return true;
}

bool curve_from_json(const nlohmann::ordered_json& doc, PerformanceCurve& out) {
  const auto& o = doc.at("outputs");
  if (!o.contains("curves")) return false;
  const auto& c = o.at("curves");
  out.tau = c.at("tau").get<std::vector<double>>();
  out.power = c.at("power").get<std::vector<double>>();
  out.ess = c.at("ess").get<std::vector<double>>();
  return true;
}

nlohmann::ordered_json sim_result_to_json(const SimResult& r, const SimConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["replicates"] = r.replicates;
  doc["seed"] = cfg.seed;
  doc["tau"] = cfg.tau;
  doc["arm0_per_stage"] = r.arm0_per_stage;
  doc["arm1_per_stage"] = r.arm1_per_stage;
  doc["reject_rate"] = r.reject_rate;
  doc["se_reject"] = r.se_reject;
  doc["accept_rate"] = r.accept_rate;
  doc["se_accept"] = r.se_accept;
  doc["mean_n"] = r.mean_n;
  doc["se_mean_n"] = r.se_mean_n;
  doc["reject_at"] = r.reject_at;
  doc["accept_at"] = r.accept_at;
  doc["stage_stop_freq"] = r.stage_stop_freq;
  doc["se_stage_stop"] = r.se_stage_stop;
  return doc;
}

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::string curve_csv(const PerformanceCurve& curve) {
  std::string out = "tau,power,ess\n";
  for (std::size_t i = 0; i < curve.tau.size(); ++i) {
    out += format_double(curve.tau[i]);
    out += ',';
    out += format_double(curve.power[i]);
    out += ',';
    out += format_double(curve.ess[i]);
    out += '\n';
  }
  return out;
}

namespace {

struct Panel {
  double x0, y0, width, height;  // drawing area in SVG coordinates
};

void append_panel(std::string& svg, const Panel& p, const std::vector<double>& xs,
                  const std::vector<double>& ys, const std::string& label,
                  const std::string& color) {
  const double xmin = *std::min_element(xs.begin(), xs.end());
  const double xmax = *std::max_element(xs.begin(), xs.end());
  double ymin = *std::min_element(ys.begin(), ys.end());
  double ymax = *std::max_element(ys.begin(), ys.end());
  if (ymax - ymin < 1e-12) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  auto sx = [&](double x) { return p.x0 + (x - xmin) / (xmax - xmin) * p.width; };
  auto sy = [&](double y) { return p.y0 + p.height - (y - ymin) / (ymax - ymin) * p.height; };

  std::ostringstream os;
  os << "<rect x=\"" << p.x0 << "\" y=\"" << p.y0 << "\" width=\"" << p.width
     << "\" height=\"" << p.height << "\" fill=\"none\" stroke=\"#444\"/>\n";
  os << "<text x=\"" << p.x0 + p.width / 2 << "\" y=\"" << p.y0 - 8
     << "\" text-anchor=\"middle\" font-size=\"13\">" << label << "</text>\n";
  os << "<text x=\"" << p.x0 - 6 << "\" y=\"" << sy(ymin)
     << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(ymin) << "</text>\n";
  os << "<text x=\"" << p.x0 - 6 << "\" y=\"" << sy(ymax) + 4
     << "\" text-anchor=\"end\" font-size=\"10\">" << format_double(ymax) << "</text>\n";
  os << "<text x=\"" << sx(xmin) << "\" y=\"" << p.y0 + p.height + 14
     << "\" text-anchor=\"middle\" font-size=\"10\">" << format_double(xmin) << "</text>\n";
  os << "<text x=\"" << sx(xmax) << "\" y=\"" << p.y0 + p.height + 14
     << "\" text-anchor=\"middle\" font-size=\"10\">" << format_double(xmax) << "</text>\n";
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << sx(xs[i]) << ',' << sy(ys[i]) << ' ';
  }
  os << "\"/>\n";
  svg += os.str();
}

}  // namespace

std::string curve_svg(const PerformanceCurve& curve) {
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"340\" "
      "font-family=\"sans-serif\">\n";
  append_panel(svg, {60, 30, 280, 270}, curve.tau, curve.power, "power vs tau", "#1f77b4");
  append_panel(svg, {440, 30, 280, 270}, curve.tau, curve.ess, "E(N|tau) vs tau", "#d62728");
  svg += "</svg>\n";
  return svg;
}

}  // namespace gsd
