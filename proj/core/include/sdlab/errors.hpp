#pragma once

#include <stdexcept>
#include <string>

namespace sdlab {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input or configuration: bad bin width, missing parameters,
// mismatched domains, out-of-range quantum numbers. CLI exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A computation failed to meet its tolerance: root finder stuck, basis
// too small, spectrum not positive. CLI exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Root finder exhausted its iteration cap; carries the last bracket.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double lo, double hi)
      : NumericalError(what), bracket_lo(lo), bracket_hi(hi) {}
  double bracket_lo;
  double bracket_hi;
};

// Projection left too much of the state unexplained.
class IncompleteBasisError : public NumericalError {
 public:
  IncompleteBasisError(const std::string& what, double residual_norm,
                       double suggested_e_max)
      : NumericalError(what),
        residual(residual_norm),
        suggested_e_max(suggested_e_max) {}
  double residual;
  double suggested_e_max;
};

// A reduced density matrix produced an eigenvalue below the PSD floor.
class PsdViolationError : public NumericalError {
 public:
  PsdViolationError(const std::string& what, double min_eig)
      : NumericalError(what), min_eigenvalue(min_eig) {}
  double min_eigenvalue;
};

}  // namespace sdlab
