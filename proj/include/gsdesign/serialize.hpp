#pragma once

#include <string>

#include <json.hpp>

#include "gsdesign/designs.hpp"
#include "gsdesign/performance.hpp"
#include "gsdesign/simulate.hpp"

namespace gsd {

inline constexpr int kSchemaVersion = 1;

/// DesignDocument: the machine-readable form of a solved design. Field order
/// is fixed so that serialize -> parse -> serialize is byte-identical.
nlohmann::ordered_json design_to_json(const Design& design,
                                      const PerformanceSummary* performance = nullptr,
                                      const PerformanceCurve* curve = nullptr);

Design design_from_json(const nlohmann::ordered_json& doc);

/// Optional parts of a parsed DesignDocument.
bool performance_from_json(const nlohmann::ordered_json& doc, PerformanceSummary& out);
bool curve_from_json(const nlohmann::ordered_json& doc, PerformanceCurve& out);

nlohmann::ordered_json sim_result_to_json(const SimResult& result, const SimConfig& config);

/// Serialization settings shared by all emitters (2-space indent, trailing newline).
std::string dump_json(const nlohmann::ordered_json& j);

/// CSV with header tau,power,ess; locale-independent shortest-round-trip numbers.
std::string curve_csv(const PerformanceCurve& curve);

/// Minimal two-panel SVG line chart (power and ESS against tau).
std::string curve_svg(const PerformanceCurve& curve);

}  // namespace gsd
