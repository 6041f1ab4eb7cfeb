#include "fuzzcal/conformable.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fuzzcal/errors.hpp"
#include "quadrature.hpp"

namespace fuzzcal {

ConformableContext::ConformableContext(double alpha, double basepoint)
    : alpha_(alpha), basepoint_(basepoint) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("conformable order must lie in (0, 1], got " +
                      std::to_string(alpha));
  }
  if (!(basepoint >= 0.0)) {
    throw DomainError("conformable basepoint must be >= 0, got " +
                      std::to_string(basepoint));
  }
}

double ConformableContext::conformable_time(double tau) const {
  const double d = tau - basepoint_;
  if (d < 0.0) throw DomainError("conformable time requested before the basepoint");
  return alpha_ == 1.0 ? d : std::pow(d, alpha_) / alpha_;
}

double ConformableContext::tau_at(double u) const {
  if (u < 0.0) throw DomainError("negative conformable time");
  return alpha_ == 1.0 ? basepoint_ + u
                       : basepoint_ + std::pow(alpha_ * u, 1.0 / alpha_);
}

double ConformableContext::prefactor(double tau) const {
  const double d = tau - basepoint_;
  if (d < 0.0) throw DomainError("prefactor requested before the basepoint");
  return alpha_ == 1.0 ? 1.0 : std::pow(d, 1.0 - alpha_);
}

double default_step(double tau) noexcept {
  return 1e-6 * std::max(1.0, std::abs(tau));
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Difference {
  std::array<double, 3> d;
  double noise;  // round-off floor of the stencil
  bool one_sided;
};

std::array<double, 3> parts(const TFN& p) { return {p.left(), p.peak(), p.right()}; }

// Componentwise derivative of g at x with step h, restricted to [lo, hi].
template <class G>
Difference difference(const G& g, double x, double h, double lo, double hi) {
  Difference out{};
  double mag = 1.0;
  auto grab = [&](double at) {
    const auto v = parts(g(at));
    for (double c : v) mag = std::max(mag, std::abs(c));
    return v;
  };
  if (x - h >= lo && x + h <= hi) {
    const auto p = grab(x + h);
    const auto m = grab(x - h);
    for (int i = 0; i < 3; ++i) out.d[i] = (p[i] - m[i]) / (2.0 * h);
    out.one_sided = false;
  } else if (x + 2.0 * h <= hi) {
    const auto f0 = grab(x);
    const auto f1 = grab(x + h);
    const auto f2 = grab(x + 2.0 * h);
    for (int i = 0; i < 3; ++i) out.d[i] = (-3.0 * f0[i] + 4.0 * f1[i] - f2[i]) / (2.0 * h);
    out.one_sided = true;
  } else if (x - 2.0 * h >= lo) {
    const auto f0 = grab(x);
    const auto f1 = grab(x - h);
    const auto f2 = grab(x - 2.0 * h);
    for (int i = 0; i < 3; ++i) out.d[i] = (3.0 * f0[i] - 4.0 * f1[i] + f2[i]) / (2.0 * h);
    out.one_sided = true;
  } else {
    throw DomainError("domain too narrow for a finite-difference stencil at " +
                      std::to_string(x));
  }
  out.noise = 64.0 * kEps * mag / h;
  return out;
}

GHDiffResult classify(const Difference& diff, double tau) {
  const auto [d1, d2, d3] = diff.d;
  const double scale = std::max({1.0, std::abs(d1), std::abs(d2), std::abs(d3)});
  const double tol = 1e-9 * scale + diff.noise;
  if (d1 <= d2 + tol && d2 <= d3 + tol) {
    return {TFN::snapped(d1, d2, d3, 2.0 * tol), DiffCase::CaseI, diff.one_sided};
  }
  if (d3 <= d2 + tol && d2 <= d1 + tol) {
    return {TFN::snapped(d3, d2, d1, 2.0 * tol), DiffCase::CaseII, diff.one_sided};
  }
  throw NotGHDifferentiable("component derivatives (" + std::to_string(d1) + ", " +
                                std::to_string(d2) + ", " + std::to_string(d3) +
                                ") follow neither gH ordering at tau = " +
                                std::to_string(tau),
                            tau);
}

void require_in_domain(const FuzzyFunction& f, double tau) {
  if (!f.domain().contains(tau)) {
    throw DomainError("tau = " + std::to_string(tau) + " outside function domain");
  }
}

Difference tau_difference(const FuzzyFunction& f, double tau, double h) {
  require_in_domain(f, tau);
  return difference([&f](double x) { return f.eval_unchecked(x); }, tau, h,
                    f.domain().lo, f.domain().hi);
}

}  // namespace

GHDiffResult gh_derivative(const FuzzyFunction& f, double tau,
                           std::optional<double> step) {
  const double h = step.value_or(default_step(tau));
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  return classify(tau_difference(f, tau, h), tau);
}

DiffCase classify_case(const FuzzyFunction& f, double tau) {
  return gh_derivative(f, tau).diff_case;
}

GHDiffResult conformable_derivative(const FuzzyFunction& f,
                                    const ConformableContext& ctx, double tau) {
  const double a = ctx.basepoint();
  if (!(tau > a)) {
    throw DomainError("conformable derivative needs tau > basepoint (tau = " +
                      std::to_string(tau) + ", a = " + std::to_string(a) + ")");
  }
  require_in_domain(f, tau);
  if (ctx.alpha() == 1.0) return gh_derivative(f, tau);

  const double h_tau = default_step(tau);
  const double u = ctx.conformable_time(tau);
  const double h_u = default_step(u);
  const double reach_tau = (tau - a) / h_tau;
  const double reach_u = u / h_u;

  if (reach_u > reach_tau) {
    const Domain& dom = f.domain();
    const double u_lo = dom.lo > a ? ctx.conformable_time(dom.lo) : 0.0;
    const double u_hi = std::isinf(dom.hi) ? dom.hi : ctx.conformable_time(dom.hi);
    auto g = [&](double v) {
      return f.eval_unchecked(std::clamp(ctx.tau_at(v), dom.lo, dom.hi));
    };
    return classify(difference(g, u, h_u, u_lo, u_hi), tau);
  }

  GHDiffResult r = classify(tau_difference(f, tau, h_tau), tau);
  r.value = scalar_mul(ctx.prefactor(tau), r.value);
  return r;
}

GHDiffResult conformable_derivative_of_sum(const FuzzyFunction& f,
                                           const FuzzyFunction& g,
                                           const ConformableContext& ctx,
                                           double tau) {
  const GHDiffResult tf = conformable_derivative(f, ctx, tau);
  const GHDiffResult tg = conformable_derivative(g, ctx, tau);
  // Crisp derivatives satisfy both orderings, so they combine with either case.
  const bool compatible = tf.diff_case == tg.diff_case || tf.value.is_crisp() ||
                          tg.value.is_crisp();
  if (!compatible) {
    throw MixedCase("operands are differentiable in different cases at tau = " +
                    std::to_string(tau));
  }
  const DiffCase c = tf.value.is_crisp() ? tg.diff_case : tf.diff_case;
  return {tf.value + tg.value, c, tf.one_sided || tg.one_sided};
}

FuzzyFunction conformable_derivative_function(const FuzzyFunction& f,
                                              const ConformableContext& ctx) {
  return FuzzyFunction(
      [f, ctx](double tau) { return conformable_derivative(f, ctx, tau).value; },
      f.domain());
}

double diameter_derivative(const FuzzyFunction& f, double tau) {
  const Difference d = tau_difference(f, tau, default_step(tau));
  return d.d[2] - d.d[0];
}

const char* to_string(SwitchKind k) noexcept {
  return k == SwitchKind::TypeI ? "TypeI" : "TypeII";
}

std::vector<SwitchingPoint> find_switching_points(const FuzzyFunction& f,
                                                  double lo, double hi,
                                                  std::size_t grid_n) {
  if (!(lo < hi)) throw DomainError("switching-point search needs lo < hi");
  if (grid_n < 2) throw DomainError("switching-point search needs grid_n >= 2");
  if (!f.domain().contains(lo) || !f.domain().contains(hi)) {
    throw DomainError("search interval must lie inside the function domain");
  }

  // Sign of the diameter derivative, zero inside the stencil's noise band.
  auto sign_at = [&f](double tau) {
    const Difference d = tau_difference(f, tau, default_step(tau));
    const double g = d.d[2] - d.d[0];
    const double band = 2.0 * d.noise + 1e-12 * std::max(1.0, std::abs(d.d[0]) +
                                                                   std::abs(d.d[2]));
    if (std::abs(g) <= band) return 0;
    return g > 0.0 ? 1 : -1;
  };

  const double tol = 1e-9 * (hi - lo);
  const double dx = (hi - lo) / static_cast<double>(grid_n - 1);
  auto node = [&](std::size_t k) {
    return k + 1 == grid_n ? hi : lo + static_cast<double>(k) * dx;
  };

  std::vector<SwitchingPoint> out;
  int last_sign = 0;
  double last_x = lo;
  for (std::size_t k = 0; k < grid_n; ++k) {
    const double x = node(k);
    const int s = sign_at(x);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) {
      double left = last_x;
      double right = x;
      double root = 0.5 * (left + right);
      while (right - left > tol) {
        root = 0.5 * (left + right);
        const int sm = sign_at(root);
        if (sm == 0) break;
        if (sm == last_sign) {
          left = root;
        } else {
          right = root;
        }
        root = 0.5 * (left + right);
      }
      if (root > lo && root < hi) {
        out.push_back({root, last_sign > 0 ? SwitchKind::TypeI : SwitchKind::TypeII});
      }
    }
    last_sign = s;
    last_x = x;
  }
  return out;
}

TriangularFuzzyNumber conformable_integral(const FuzzyFunction& f,
                                           const ConformableContext& ctx,
                                           double tau, double rel_tol) {
  const double a = ctx.basepoint();
  if (!(tau > a)) throw DomainError("conformable integral needs tau > basepoint");
  if (!f.domain().contains(a) || !f.domain().contains(tau)) {
    throw DomainError("integration range [a, tau] leaves the function domain");
  }
  const double upper = ctx.conformable_time(tau);
  std::array<double, 3> acc{};
  for (int i = 0; i < 3; ++i) {
    auto integrand = [&, i](double v) {
      return parts(f.eval_unchecked(std::min(ctx.tau_at(v), tau)))[i];
    };
    acc[i] = detail::integrate(integrand, 0.0, upper, rel_tol).value;
  }
  const double slack =
      rel_tol * std::max({1.0, std::abs(acc[0]), std::abs(acc[1]), std::abs(acc[2])});
  return TFN::snapped(acc[0], acc[1], acc[2], slack);
}

}  // namespace fuzzcal
