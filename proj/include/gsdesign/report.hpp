#pragma once

#include <string>

#include "gsdesign/designs.hpp"
#include "gsdesign/performance.hpp"
#include "gsdesign/simulate.hpp"

namespace gsd {

/// Human-readable design report: hypotheses, targets, per-stage sizes,
/// boundaries, and operating characteristics.
std::string text_report(const Design& design, const PerformanceSummary* performance);

std::string text_report(const SimResult& result, const SimConfig& config);

}  // namespace gsd
