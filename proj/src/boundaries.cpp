#include "gsdesign/boundaries.hpp"

#include <cmath>
#include <string>

#include "gsdesign/errors.hpp"

namespace gsd {

void BoundarySet::validate() const {
  const std::size_t L = efficacy.size();
  if (L == 0) throw StructuralError("boundary set is empty");
  if (futility.size() != L) {
    throw StructuralError("futility and efficacy boundaries differ in length");
  }
  for (std::size_t l = 0; l + 1 < L; ++l) {
    if (sidedness == Sidedness::TwoSided && futility[l] < 0.0) {
      throw StructuralError("two-sided futility boundary negative at stage " +
                            std::to_string(l + 1));
    }
    if (!(futility[l] < efficacy[l])) {
      throw StructuralError("futility boundary not below efficacy boundary at stage " +
                            std::to_string(l + 1));
    }
  }
  const double tol = 1e-9 * std::max(1.0, std::fabs(efficacy[L - 1]));
  if (std::fabs(futility[L - 1] - efficacy[L - 1]) > tol) {
    throw StructuralError("final futility and efficacy boundaries must coincide");
  }
}

}  // namespace gsd
