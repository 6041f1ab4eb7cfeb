#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fuzzcal/context.hpp"
#include "fuzzcal/function_form.hpp"
#include "fuzzcal/fuzzy_function.hpp"
#include "fuzzcal/fuzzy_number.hpp"

namespace fuzzcal {

/// Transform evaluated at a real s above the abscissa of convergence.
struct TransformValue {
  double s;
  TriangularFuzzyNumber value;
};

/// D(f(tau), 0) <= M exp(c (tau - a)^alpha / alpha) on the fitted tail.
struct ExpBound {
  double M;
  double c;
  double alpha;
};

/// coefficient (.) 1 / (s - pole); the scalar is positive for s > pole.
struct PoleTerm {
  TriangularFuzzyNumber coefficient;
  double pole;
};

/// Fuzzy sum of simple poles: the s-domain image of FunctionForm's constant
/// and conformable exponential terms.
class SymbolicTransform {
 public:
  SymbolicTransform(ConformableContext ctx, std::vector<PoleTerm> terms);

  /// Largest pole; -infinity for the zero transform.
  double abscissa() const noexcept;

  /// W(s). Throws DivergentTransform for s <= abscissa().
  TriangularFuzzyNumber operator()(double s) const;

  const ConformableContext& context() const noexcept { return ctx_; }
  const std::vector<PoleTerm>& terms() const noexcept { return terms_; }

  /// e.g. "(516, 540, 598)/(s - 0.0333333333333333)".
  std::string to_string() const;

 private:
  ConformableContext ctx_;
  std::vector<PoleTerm> terms_;
};

/// Least-squares fit of log D(f(tau), 0) against (tau - a)^alpha / alpha on
/// grid_n points of [t1, t2]; the slope is c and M = 1.05 * max(exp(intercept),
/// max_k D_k exp(-c x_k)), so the bound holds on every sample. Samples with
/// D = 0 are skipped; if all vanish the result is (epsilon, 0).
/// Requires basepoint < t1 < t2 inside f's domain.
ExpBound estimate_exp_bound(const FuzzyFunction& f, const ConformableContext& ctx,
                            double t1, double t2, std::size_t grid_n = 64);

/// estimate_exp_bound over the tail where conformable time runs from 5 to 40.
ExpBound default_exp_bound(const FuzzyFunction& f, const ConformableContext& ctx);

/// Numerical fuzzy conformable Laplace transform of f at s.
///
/// Componentwise after the substitution u = (tau - a)^alpha / alpha, which
/// turns the weight into du and the kernel into exp(-s u); the integral is
/// truncated at U = log(max(M, 1) / 1e-12) / (s - c) and evaluated by adaptive
/// Gauss-Kronrod to relative rel_tol. f must be defined on [a, +inf).
///
/// Throws DivergentTransform for s <= max(0, c), IntegrationError on quadrature
/// failure, DomainError for a finite domain.
TransformValue laplace_numeric(const FuzzyFunction& f, const ConformableContext& ctx,
                               double s, const ExpBound& bound, double rel_tol = 1e-9);
/// As above with default_exp_bound(f, ctx).
TransformValue laplace_numeric(const FuzzyFunction& f, const ConformableContext& ctx,
                               double s);

/// Table lookup: constant k -> k/s, k exp(lambda u) -> k/(s - lambda), fuzzy
/// sums termwise. Throws NoSymbolicForm for any other basis.
SymbolicTransform laplace_symbolic(const FunctionForm& f);

/// Closed-form time-domain preimage of a pole sum, as a FunctionForm.
FunctionForm inverse_form(const SymbolicTransform& w);

/// inverse_form(w) as a FuzzyFunction on [a, +inf).
FuzzyFunction laplace_inverse(const SymbolicTransform& w);

/// Transform of the conformable derivative from the transform of the function:
/// Case I  s W(s) - w0 (Hukuhara difference, NotTriangular if it fails);
/// Case II (-1) w0 -gH (-1) s W(s).
TriangularFuzzyNumber laplace_of_derivative(const TransformValue& w,
                                            const TriangularFuzzyNumber& w0,
                                            DiffCase c);
TriangularFuzzyNumber laplace_of_derivative(const SymbolicTransform& w,
                                            const TriangularFuzzyNumber& w0,
                                            DiffCase c, double s);

}  // namespace fuzzcal
