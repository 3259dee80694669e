#pragma once

#include <stdexcept>
#include <string>

namespace chz {

/// Incompatible shapes or sizes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain (bad alpha, wrong matrix shape for a method, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numerical failure: singular systems, branch cuts, non-convergence, defective matrices.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (matrix JSON, complex literals, numeric lists).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A name (forcing, demo) that is not in the shipped catalogue.
class UnknownNameError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The integrator hit a non-finite or oversized state.
class BlowUpError : public NumericalError {
 public:
  BlowUpError(double t, const std::string& what) : NumericalError(what), time_(t) {}
  double time() const { return time_; }

 private:
  double time_;
};

}  // namespace chz
