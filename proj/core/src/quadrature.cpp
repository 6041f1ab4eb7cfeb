#include "quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "fuzzcal/errors.hpp"

namespace fuzzcal::detail {

Quadrature integrate(const std::function<double(double)>& g, double a, double b,
                     double rel_tol) {
  if (a == b) return {0.0, 0.0};
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      g, a, b, 25, rel_tol, &error, &l1);
  if (!std::isfinite(value)) {
    throw IntegrationError("quadrature produced a non-finite value",
                           std::numeric_limits<double>::infinity());
  }
  // Absolute floor for integrands that vanish identically or nearly so.
  const double floor = 1e-300;
  if (error > rel_tol * l1 && error > floor) {
    const double achieved = l1 > 0.0 ? error / l1 : error;
    throw IntegrationError("quadrature did not converge: relative error " +
                               std::to_string(achieved) + " > " +
                               std::to_string(rel_tol),
                           achieved);
  }
  return {value, error};
}

}  // namespace fuzzcal::detail
