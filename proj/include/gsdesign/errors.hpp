#pragma once

#include <stdexcept>
#include <string>

namespace gsd {

/// Invalid user-supplied parameter; the message names the offending field.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Mismatched sizes between structures that must agree (e.g. boundary vs schedule length).
class StructuralError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Root finder given an interval without a sign change.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Iteration cap exceeded in an iterative solver.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Quadrature failed to reach the requested tolerance; carries the achieved error estimate.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& msg, double achieved)
      : std::runtime_error(msg), achieved_error(achieved) {}
  double achieved_error;
};

/// A calibrated boundary shape violates the family's ordering constraints.
class InfeasibleShapeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Calibration targets unreachable for the requested family.
class CalibrationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsd
