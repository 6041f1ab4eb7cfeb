#pragma once

#include <functional>

namespace fuzzcal::detail {

struct Quadrature {
  double value;
  double error;  ///< absolute error estimate
};

/// Adaptive 15-point Gauss-Kronrod on a finite interval. Throws
/// IntegrationError when the error estimate exceeds rel_tol * L1-norm.
Quadrature integrate(const std::function<double(double)>& g, double a, double b,
                     double rel_tol);

}  // namespace fuzzcal::detail
