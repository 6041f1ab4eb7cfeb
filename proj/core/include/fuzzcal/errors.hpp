#pragma once

#include <stdexcept>
#include <string>

namespace fuzzcal {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation
/// (r-cut level outside [0,1], derivative at the basepoint, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result would leave the set of triangular fuzzy numbers.
class NotTriangular : public Error {
 public:
  using Error::Error;
};

/// Neither the (i) nor the (ii) ordering of the component derivatives holds.
class NotGHDifferentiable : public Error {
 public:
  explicit NotGHDifferentiable(const std::string& what, double tau)
      : Error(what), tau_(tau) {}
  double tau() const noexcept { return tau_; }

 private:
  double tau_;
};

/// Operands of a same-case identity carry different differentiability cases.
class MixedCase : public Error {
 public:
  using Error::Error;
};

/// Quadrature did not reach its requested tolerance.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  /// Relative error estimate the integrator actually reached.
  double achieved_tolerance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Transform variable at or below the abscissa of convergence.
class DivergentTransform : public Error {
 public:
  DivergentTransform(const std::string& what, double s, double abscissa)
      : Error(what), s_(s), abscissa_(abscissa) {}
  double s() const noexcept { return s_; }
  double abscissa() const noexcept { return abscissa_; }

 private:
  double s_;
  double abscissa_;
};

/// Expression has no entry in the symbolic transform table.
class NoSymbolicForm : public Error {
 public:
  using Error::Error;
};

/// Problem does not match any of the solvable templates.
class UnsupportedProblem : public Error {
 public:
  using Error::Error;
};

/// A produced solution is not differentiable in the case the solver selected.
class CaseMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input document (JSON schema violations and the like).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzcal
