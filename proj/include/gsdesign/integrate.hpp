#pragma once

#include <vector>

#include "gsdesign/boundaries.hpp"
#include "gsdesign/canonical.hpp"

namespace gsd {

struct QuadratureOptions {
  int nodes_per_interval = 64;  ///< Gauss-Legendre nodes per continuation sub-interval
  double abs_tol = 1e-8;        ///< tolerance on the refinement error estimate
  bool refine = true;           ///< re-run at doubled node count and keep the refined values
};

/// Per-stage stopping probabilities for a design evaluated at effect tau.
struct StoppingProbabilities {
  std::vector<double> reject_at;
  std::vector<double> accept_at;
  double error_estimate = 0.0;  ///< max refinement change, 0 when refinement is off

  double rejection() const;
  double acceptance() const;
};

/// Stage-wise crossing probabilities of the canonical joint distribution.
///
/// Propagates the sub-density of Z_l over the continuation region from stage
/// to stage using the Markov transition implied by cov(Z_{l1}, Z_{l2}) =
/// sqrt(I_{l1}/I_{l2}); boundary-crossing masses are collected through the
/// exact conditional normal tails, so no infinite integration limits arise.
StoppingProbabilities stopping_probabilities(const BoundarySet& bounds,
                                             const InformationSchedule& schedule,
                                             double tau,
                                             const QuadratureOptions& opts = {});

/// P(Reject H0 | tau): sum of reject_at over stages.
double rejection_probability(const BoundarySet& bounds,
                             const InformationSchedule& schedule, double tau,
                             const QuadratureOptions& opts = {});

/// E(N | tau) = sum_l {P(stop at l | tau)} * N_l.
double expected_sample_size(const BoundarySet& bounds,
                            const InformationSchedule& schedule, double tau,
                            const QuadratureOptions& opts = {});

}  // namespace gsd
