#pragma once

#include <array>
#include <functional>
#include <utility>

namespace gsd {

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

struct SimplexResult {
  std::array<double, 2> argmin{0.0, 0.0};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Brent's method on a bracketing interval [lo, hi] with f(lo) * f(hi) <= 0.
/// Stops when the bracketing interval narrows to tol (or f hits zero);
/// evaluations never leave [lo, hi]. Throws BracketError / ConvergenceError.
RootResult brent_root(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-12, int max_iter = 200);

/// Golden-section maximization of a unimodal f on [lo, hi]; for non-unimodal
/// f the result is a local maximizer. Returns (argmax, value).
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                     double hi, double tol = 1e-8, int max_iter = 500);

/// Nelder-Mead in two dimensions. Converged when both the simplex
/// function-value spread and its diameter fall below tol; otherwise the best
/// point so far is returned with converged = false once the iteration cap is
/// reached. Deterministic for fixed (f, start, tol).
SimplexResult nelder_mead(const std::function<double(double, double)>& f,
                          std::array<double, 2> start, double tol = 1e-12,
                          int max_iter = 1000);

}  // namespace gsd
