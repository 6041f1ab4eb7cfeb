#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fuzzcal/context.hpp"
#include "fuzzcal/function_form.hpp"
#include "fuzzcal/fuzzy_number.hpp"
#include "fuzzcal/laplace.hpp"

namespace fuzzcal {

/// Linear fuzzy conformable IVP  T_alpha w = F(tau, w),  w(a) = w0, with
///   F = sign * kappa (.) w                 (no ambient), or
///   F = (-1) kappa (.) (w - M)             (ambient M, Hukuhara difference).
struct LinearFCFIVP {
  double kappa;
  int sign;  ///< +1 or -1
  std::optional<TriangularFuzzyNumber> ambient;
  TriangularFuzzyNumber w0;
  ConformableContext ctx;

  /// Right-hand side F(tau, w); independent of tau for every template.
  TriangularFuzzyNumber rhs(const TriangularFuzzyNumber& w) const;
  std::string describe() const;
};

LinearFCFIVP growth_problem(const TriangularFuzzyNumber& w0, double kappa,
                            const ConformableContext& ctx);
LinearFCFIVP decay_problem(const TriangularFuzzyNumber& w0, double kappa,
                           const ConformableContext& ctx);
LinearFCFIVP cooling_problem(const TriangularFuzzyNumber& w0,
                             const TriangularFuzzyNumber& ambient, double kappa,
                             const ConformableContext& ctx);

struct DerivationStep {
  std::string name;    ///< "transform", "initial-condition", "solve", "inverse"
  std::string detail;
};

struct ClosedFormSolution {
  FunctionForm form;
  DiffCase diff_case;
  SymbolicTransform transform;
  std::vector<DerivationStep> derivation;

  TriangularFuzzyNumber operator()(double tau) const { return form(tau); }
  FuzzyFunction expression() const { return form.to_function(); }
};

/// Case I for a positive effective rate sign * kappa (and for zero, where the
/// solution is constant), Case II for a negative one.
DiffCase select_case(const LinearFCFIVP& problem);

/// w0 (.) exp(kappa (tau - a)^alpha / alpha), Case I. Throws
/// UnsupportedProblem for kappa <= 0 (use solve_decay).
ClosedFormSolution solve_growth(const TriangularFuzzyNumber& w0, double kappa,
                                const ConformableContext& ctx);

/// w0 (.) exp(-kappa (tau - a)^alpha / alpha), Case II. Throws
/// UnsupportedProblem for kappa <= 0 (use solve_growth).
ClosedFormSolution solve_decay(const TriangularFuzzyNumber& w0, double kappa,
                               const ConformableContext& ctx);

/// (w0 - M) (.) exp(-kappa (tau - a)^alpha / alpha) + M, Case II, with the
/// Hukuhara difference w0 - M. Throws NotTriangular when that difference does
/// not exist and UnsupportedProblem for kappa <= 0.
ClosedFormSolution solve_newton_cooling(const TriangularFuzzyNumber& w0,
                                        const TriangularFuzzyNumber& ambient,
                                        double kappa, const ConformableContext& ctx);

/// Dispatch on the template. A negative effective rate without ambient is a
/// decay, a positive one a growth; zero yields the constant solution.
/// Throws UnsupportedProblem when no template matches.
ClosedFormSolution solve(const LinearFCFIVP& problem);

/// The cooling expression `difference (.) exp(-kappa u) + ambient` for an
/// arbitrary difference, without solving anything.
FunctionForm cooling_form(const TriangularFuzzyNumber& difference,
                          const TriangularFuzzyNumber& ambient, double kappa,
                          const ConformableContext& ctx);

struct ResidualReport {
  double max_scaled_residual = 0.0;  ///< max D(T w, F) / (1 + magnitude)
  double worst_tau = 0.0;
  double initial_residual = 0.0;     ///< D(w(a), w0)
  std::size_t case_mismatches = 0;
  std::size_t grid_points = 0;
  bool passed = false;
};

/// Checks a candidate solution against the problem: the numerical conformable
/// derivative must match F on grid_n points a + span k / grid_n (k = 1..grid_n)
/// within 1e-6 (1 + magnitude), carry `expected` as its case tag (crisp
/// derivatives match either case), and w(a) must equal w0 within
/// 1e-12 (1 + |w0|).
ResidualReport check_residual(const LinearFCFIVP& problem, const FunctionForm& solution,
                              DiffCase expected, double span = 1.0,
                              std::size_t grid_n = 200);

}  // namespace fuzzcal
