#pragma once

#include <vector>

namespace gsd {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached, thread-safe lookup of the n-point rule.
const GaussLegendreRule& gauss_legendre(int n);

}  // namespace gsd
