#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "fuzzcal/fuzzy_function.hpp"
#include "fuzzcal/fuzzy_number.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Triple triple(const fuzzcal::TFN& p) { return {p.left(), p.peak(), p.right()}; }

inline fuzzcal::TFN tfn(const oracle::Triple& t) { return {t[0], t[1], t[2]}; }

// Fixed seed: failures must reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline fuzzcal::TFN random_tfn(double scale = 100.0) {
  const double b = uniform(-scale, scale);
  return {b - uniform(0, scale), b, b + uniform(0, scale)};
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double max_rel_err(const fuzzcal::TFN& got, const oracle::Triple& want) {
  return std::max({rel_err(got.left(), want[0]), rel_err(got.peak(), want[1]),
                   rel_err(got.right(), want[2])});
}

// c(tau) -/+ half-widths l h(tau), r h(tau) with h > 0: smooth and
// gH-differentiable everywhere, Case I where h grows and Case II where it shrinks.
struct SmoothFamily {
  double a0, a1, a2, omega, phi;
  double b0, b1, beta;
  double l, r;

  static SmoothFamily random() {
    SmoothFamily s{};
    s.a0 = uniform(-5, 5);
    s.a1 = uniform(-3, 3);
    s.a2 = uniform(-1, 1);
    s.omega = uniform(0.2, 2.5);
    s.phi = uniform(0, 6.28);
    s.b0 = uniform(0.1, 2);
    s.b1 = uniform(0.1, 2);
    s.beta = uniform(-1, 1);
    s.l = uniform(0.2, 2);
    s.r = uniform(0.2, 2);
    return s;
  }

  double center(double t) const { return a0 + a1 * std::sin(omega * t + phi) + a2 * t; }
  double half(double t) const { return b0 + b1 * std::exp(beta * t); }
  double component(int i, double t) const {
    if (i == 0) return center(t) - l * half(t);
    if (i == 1) return center(t);
    return center(t) + r * half(t);
  }
  std::function<double(double)> comp(int i) const {
    return [s = *this, i](double t) { return s.component(i, t); };
  }
  fuzzcal::FuzzyFunction function(fuzzcal::Domain dom = {}) const {
    return fuzzcal::FuzzyFunction::from_components(comp(0), comp(1), comp(2), dom);
  }
};

// Exponentially bounded in conformable time u: constant, log(1 + y) and
// y / (1 + y) pieces (y = tau - tau0) plus exp(lambda u) and exp(mu u).
struct LaplaceFamily {
  double alpha, tau0;
  double p0, p1, p2, lambda;
  double q0, q1, q2, mu;
  double l, r;

  static LaplaceFamily random(double alpha) {
    LaplaceFamily f{};
    f.alpha = alpha;
    // At small alpha a nonzero tau0 cannot resolve conformable time near the
    // basepoint (tau0 + (alpha u)^(1/alpha) rounds), so keep it at zero there.
    f.tau0 = alpha < 0.3 ? 0.0 : uniform(0, 1);
    f.p0 = uniform(-3, 3);
    f.p1 = uniform(-1, 1);
    f.p2 = uniform(-2, 2);
    f.lambda = uniform(-1, 0.5);
    f.q0 = uniform(0.1, 1);
    f.q1 = uniform(0, 1);
    f.q2 = uniform(0, 1);
    f.mu = uniform(-1, 0.5);
    f.l = uniform(0.2, 2);
    f.r = uniform(0.2, 2);
    return f;
  }

  double growth() const { return std::max({0.0, lambda, mu}); }
  double u_of(double y) const { return std::pow(y, alpha) / alpha; }
  double sign(int i) const { return i == 0 ? -l : i == 1 ? 0.0 : r; }

  double component(int i, double tau) const {
    const double y = tau - tau0;
    const double u = u_of(y);
    const double slow = p0 + p1 * std::log1p(y) + sign(i) * (q0 + q1 * y / (1 + y));
    return slow + p2 * std::exp(lambda * u) + sign(i) * q2 * std::exp(mu * u);
  }

  // y^(alpha-1) exp(-s u) w_i(tau0 + y), with the exponentials merged so
  // that huge y cannot produce inf * 0.
  double weighted(int i, double y, double s) const {
    const double u = u_of(y);
    const double slow = p0 + p1 * std::log1p(y) + sign(i) * (q0 + q1 * y / (1 + y));
    const double v = slow * std::exp(-s * u) + p2 * std::exp((lambda - s) * u) +
                     sign(i) * q2 * std::exp((mu - s) * u);
    return std::pow(y, alpha - 1) * v;
  }

  fuzzcal::FuzzyFunction function() const {
    auto f = *this;
    return fuzzcal::FuzzyFunction::from_components(
        [f](double t) { return f.component(0, t); }, [f](double t) { return f.component(1, t); },
        [f](double t) { return f.component(2, t); }, {tau0});
  }
};

}  // namespace support
