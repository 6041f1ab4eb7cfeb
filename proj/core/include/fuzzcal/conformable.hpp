#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzcal/context.hpp"
#include "fuzzcal/fuzzy_function.hpp"
#include "fuzzcal/fuzzy_number.hpp"

namespace fuzzcal {

/// Default finite-difference step 1e-6 * max(1, |tau|).
double default_step(double tau) noexcept;

/// Numerical gH-derivative at tau.
///
/// Each component is differentiated with a central difference (second-order
/// one-sided stencil when tau is within one step of a domain end, reported
/// through GHDiffResult::one_sided). The derivative triple is then classified:
/// w1' <= w2' <= w3' gives Case I with value (w1', w2', w3'); the reversed
/// ordering gives Case II with value (w3', w2', w1'). Component comparisons
/// allow 1e-9 * max(1, |w'|) plus the stencil's round-off floor; a triple
/// satisfying both orderings (crisp derivative) is Case I.
///
/// Throws DomainError outside the domain and NotGHDifferentiable when
/// neither ordering holds.
GHDiffResult gh_derivative(const FuzzyFunction& f, double tau,
                           std::optional<double> step = std::nullopt);

/// Only the case tag of gh_derivative(f, tau).
DiffCase classify_case(const FuzzyFunction& f, double tau);

/// Conformable gH-derivative of order ctx.alpha() at tau > basepoint:
/// (tau - a)^(1 - alpha) times the gH-derivative, case inherited.
///
/// The product is evaluated by differencing in whichever variable keeps the
/// stencil farther from the basepoint relative to its step: directly in tau,
/// or in the conformable time u = (tau - a)^alpha / alpha, where
/// d/du w(a + (alpha u)^(1/alpha)) equals the same product by the chain rule.
/// At alpha = 1 this is exactly gh_derivative.
///
/// Throws DomainError for tau <= basepoint.
GHDiffResult conformable_derivative(const FuzzyFunction& f,
                                    const ConformableContext& ctx, double tau);

/// T(f) + T(g) at tau; both operands must be differentiable in the same case
/// there, otherwise MixedCase is thrown.
GHDiffResult conformable_derivative_of_sum(const FuzzyFunction& f,
                                           const FuzzyFunction& g,
                                           const ConformableContext& ctx,
                                           double tau);

/// tau -> conformable_derivative(f, ctx, tau).value as a function in its own
/// right (same domain as f; evaluation at the basepoint still throws).
FuzzyFunction conformable_derivative_function(const FuzzyFunction& f,
                                              const ConformableContext& ctx);

/// d/dtau (w3 - w1) by the same stencil as gh_derivative.
double diameter_derivative(const FuzzyFunction& f, double tau);

enum class SwitchKind {
  TypeI,   ///< (i) on the left, (ii) on the right
  TypeII,  ///< (ii) on the left, (i) on the right
};

struct SwitchingPoint {
  double location;
  SwitchKind kind;
};

const char* to_string(SwitchKind k) noexcept;

/// Switching points of f strictly inside (lo, hi).
///
/// Scans the diameter derivative on grid_n equally spaced nodes, brackets
/// every sign change and refines it by bisection to 1e-9 * (hi - lo).
/// A + to - change is Type I, - to + is Type II. Throws DomainError unless
/// lo < hi, grid_n >= 2 and [lo, hi] lies in f's domain.
std::vector<SwitchingPoint> find_switching_points(const FuzzyFunction& f,
                                                  double lo, double hi,
                                                  std::size_t grid_n = 1024);

/// Conformable fractional integral of f from the basepoint to tau,
/// componentwise int_a^tau (xi - a)^(alpha - 1) w_i(xi) dxi.
///
/// Evaluated in conformable time, where the weight becomes du and the
/// endpoint singularity disappears. Adaptive Gauss-Kronrod to relative
/// rel_tol; throws IntegrationError if that is not reached, DomainError for
/// tau <= basepoint. Integrands that are themselves numerical (derivative
/// functions, say) need a rel_tol above their own noise.
TriangularFuzzyNumber conformable_integral(const FuzzyFunction& f,
                                           const ConformableContext& ctx,
                                           double tau, double rel_tol = 1e-10);

}  // namespace fuzzcal
