#pragma once

#include <cstddef>
#include <vector>

namespace gsd {

enum class Sidedness { OneSided, TwoSided };

/// Per-stage stopping boundaries.
///
/// Two-sided: futility holds a_1..a_L, efficacy holds r_1..r_L, stopping on
/// |Z_l| >= r_l (reject) or |Z_l| < a_l (accept). One-sided: futility holds
/// f_1..f_L, efficacy e_1..e_L, stopping on Z_l >= e_l or Z_l < f_l. The final
/// pair coincides so the trial always terminates with a decision.
struct BoundarySet {
  Sidedness sidedness = Sidedness::TwoSided;
  std::vector<double> futility;
  std::vector<double> efficacy;

  std::size_t stages() const { return efficacy.size(); }

  /// Enforces the ordering invariants; throws StructuralError on violation.
  void validate() const;
};

}  // namespace gsd
