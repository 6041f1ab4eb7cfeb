#include "fuzzcal/laplace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fuzzcal/errors.hpp"
#include "quadrature.hpp"

namespace fuzzcal {

SymbolicTransform::SymbolicTransform(ConformableContext ctx, std::vector<PoleTerm> terms)
    : ctx_(ctx), terms_(std::move(terms)) {}

double SymbolicTransform::abscissa() const noexcept {
  double a = -std::numeric_limits<double>::infinity();
  for (const PoleTerm& t : terms_) a = std::max(a, t.pole);
  return a;
}

TriangularFuzzyNumber SymbolicTransform::operator()(double s) const {
  if (!(s > abscissa())) {
    throw DivergentTransform("s = " + format_short(s) +
                                 " is not above the abscissa of convergence " +
                                 format_short(abscissa()),
                             s, abscissa());
  }
  TFN acc;
  for (const PoleTerm& t : terms_) acc = acc + scalar_mul(1.0 / (s - t.pole), t.coefficient);
  return acc;
}

std::string SymbolicTransform::to_string() const {
  if (terms_.empty()) return "(0, 0, 0)";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const PoleTerm& t = terms_[i];
    if (i > 0) out += " + ";
    const TFN& k = t.coefficient;
    out += "(" + format_short(k.left()) + ", " + format_short(k.peak()) + ", " +
           format_short(k.right()) + ")/";
    if (t.pole == 0.0) {
      out += "s";
    } else {
      out += std::string("(s ") + (t.pole > 0 ? "- " : "+ ") +
             format_short(std::abs(t.pole)) + ")";
    }
  }
  return out;
}

ExpBound estimate_exp_bound(const FuzzyFunction& f, const ConformableContext& ctx,
                            double t1, double t2, std::size_t grid_n) {
  if (!(t1 > ctx.basepoint() && t2 > t1)) {
    throw DomainError("exponential-bound tail needs basepoint < t1 < t2");
  }
  if (grid_n < 2) throw DomainError("exponential-bound fit needs grid_n >= 2");
  if (!f.domain().contains(t1) || !f.domain().contains(t2)) {
    throw DomainError("exponential-bound tail leaves the function domain");
  }
  std::vector<double> xs;
  std::vector<double> ds;
  xs.reserve(grid_n);
  ds.reserve(grid_n);
  for (std::size_t k = 0; k < grid_n; ++k) {
    const double tau =
        k + 1 == grid_n ? t2 : t1 + (t2 - t1) * static_cast<double>(k) / (grid_n - 1);
    const double d = f(tau).magnitude();
    if (d > 0.0 && std::isfinite(d)) {
      xs.push_back(ctx.conformable_time(tau));
      ds.push_back(d);
    }
  }
  const double alpha = ctx.alpha();
  if (ds.empty()) return {std::numeric_limits<double>::epsilon(), 0.0, alpha};
  if (ds.size() == 1) return {1.05 * ds.front(), 0.0, alpha};

  const double n = static_cast<double>(ds.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    sx += xs[i];
    sy += std::log(ds[i]);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (std::log(ds[i]) - my);
  }
  const double c = sxx > 0.0 ? sxy / sxx : 0.0;
  double m = std::exp(my - c * mx);
  for (std::size_t i = 0; i < ds.size(); ++i) m = std::max(m, ds[i] * std::exp(-c * xs[i]));
  return {1.05 * m, c, alpha};
}

ExpBound default_exp_bound(const FuzzyFunction& f, const ConformableContext& ctx) {
  return estimate_exp_bound(f, ctx, ctx.tau_at(5.0), ctx.tau_at(40.0));
}

TransformValue laplace_numeric(const FuzzyFunction& f, const ConformableContext& ctx,
                               double s) {
  if (!std::isinf(f.domain().hi)) {
    throw DomainError("Laplace transform needs a function defined on [a, +inf)");
  }
  return laplace_numeric(f, ctx, s, default_exp_bound(f, ctx));
}

TransformValue laplace_numeric(const FuzzyFunction& f, const ConformableContext& ctx,
                               double s, const ExpBound& bound, double rel_tol) {
  if (!std::isinf(f.domain().hi) || f.domain().lo > ctx.basepoint()) {
    throw DomainError("Laplace transform needs a function defined on [a, +inf)");
  }
  // Integration by parts behind the transform needs a decreasing kernel: s > 0.
  const double abscissa = std::max(0.0, bound.c);
  if (!(s > abscissa)) {
    throw DivergentTransform("s = " + format_short(s) +
                                 " is not above the abscissa of convergence " +
                                 format_short(abscissa),
                             s, abscissa);
  }
  const double upper = std::log(std::max(bound.M, 1.0) / 1e-12) / (s - bound.c);
  std::array<double, 3> acc{};
  for (int i = 0; i < 3; ++i) {
    auto integrand = [&, i](double u) {
      const TFN w = f.eval_unchecked(ctx.tau_at(u));
      const double wi = i == 0 ? w.left() : i == 1 ? w.peak() : w.right();
      return std::exp(-s * u) * wi;
    };
    acc[i] = detail::integrate(integrand, 0.0, upper, rel_tol).value;
  }
  const double slack =
      rel_tol * std::max({1.0, std::abs(acc[0]), std::abs(acc[1]), std::abs(acc[2])});
  return {s, TFN::snapped(acc[0], acc[1], acc[2], slack)};
}

SymbolicTransform laplace_symbolic(const FunctionForm& f) {
  std::vector<PoleTerm> poles;
  poles.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    switch (t.basis) {
      case Basis::Constant: poles.push_back({t.coefficient, 0.0}); break;
      case Basis::ConformableExp: poles.push_back({t.coefficient, t.rate}); break;
      default:
        throw NoSymbolicForm(std::string("no table entry for basis '") +
                             to_string(t.basis) + "'");
    }
  }
  return {f.context(), std::move(poles)};
}

FunctionForm inverse_form(const SymbolicTransform& w) {
  std::vector<Term> terms;
  terms.reserve(w.terms().size());
  for (const PoleTerm& p : w.terms()) {
    if (p.pole == 0.0) {
      terms.push_back({p.coefficient, Basis::Constant, 0.0, 0.0});
    } else {
      terms.push_back({p.coefficient, Basis::ConformableExp, p.pole, 0.0});
    }
  }
  return {w.context(), std::move(terms)};
}

FuzzyFunction laplace_inverse(const SymbolicTransform& w) {
  return inverse_form(w).to_function();
}

TriangularFuzzyNumber laplace_of_derivative(const TransformValue& w,
                                            const TriangularFuzzyNumber& w0,
                                            DiffCase c) {
  if (c == DiffCase::CaseI) return hukuhara_difference(scalar_mul(w.s, w.value), w0);
  return gh_difference(scalar_mul(-1.0, w0), scalar_mul(-w.s, w.value)).value;
}

TriangularFuzzyNumber laplace_of_derivative(const SymbolicTransform& w,
                                            const TriangularFuzzyNumber& w0,
                                            DiffCase c, double s) {
  return laplace_of_derivative(TransformValue{s, w(s)}, w0, c);
}

}  // namespace fuzzcal
