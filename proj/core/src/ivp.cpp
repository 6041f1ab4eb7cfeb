#include "fuzzcal/ivp.hpp"

#include <algorithm>
#include <cmath>

#include "fuzzcal/conformable.hpp"
#include "fuzzcal/errors.hpp"

namespace fuzzcal {

namespace {

std::string show(const TFN& p) {
  return "(" + format_short(p.left()) + ", " + format_short(p.peak()) + ", " +
         format_short(p.right()) + ")";
}

// Post-hoc agreement between the selected case and the produced solution.
void validate_case(const FunctionForm& form, DiffCase expected) {
  const FuzzyFunction f = form.to_function();
  const ConformableContext& ctx = form.context();
  constexpr int kSamples = 16;
  for (int k = 1; k <= kSamples; ++k) {
    const double tau = ctx.basepoint() + static_cast<double>(k) / kSamples;
    const GHDiffResult d = conformable_derivative(f, ctx, tau);
    if (d.diff_case != expected && !d.value.is_crisp()) {
      throw CaseMismatch(std::string("solution is ") + to_string(d.diff_case) +
                         "-differentiable at tau = " + format_short(tau) +
                         " but the solver selected " + to_string(expected));
    }
  }
}

void require_positive(double kappa, const char* solver, const char* other) {
  if (!(kappa > 0.0)) {
    throw UnsupportedProblem(std::string(solver) + " needs kappa > 0, got " +
                             format_short(kappa) + "; use " + other);
  }
}

ClosedFormSolution finish(SymbolicTransform w, DiffCase c,
                          std::vector<DerivationStep> steps) {
  FunctionForm form = inverse_form(w);
  steps.push_back({"inverse", "w(tau) = " + form.to_string()});
  validate_case(form, c);
  return {std::move(form), c, std::move(w), std::move(steps)};
}

}  // namespace

TriangularFuzzyNumber LinearFCFIVP::rhs(const TriangularFuzzyNumber& w) const {
  if (ambient) return scalar_mul(-kappa, hukuhara_difference(w, *ambient));
  return scalar_mul(sign * kappa, w);
}

std::string LinearFCFIVP::describe() const {
  std::string lhs = "T_" + format_short(ctx.alpha()) + " w = ";
  std::string f;
  if (ambient) {
    f = "(-1)" + format_short(kappa) + " (w - " + show(*ambient) + ")";
  } else {
    f = (sign < 0 ? "(-1)" : "") + format_short(kappa) + " w";
  }
  return lhs + f + ", w(" + format_short(ctx.basepoint()) + ") = " + show(w0);
}

LinearFCFIVP growth_problem(const TriangularFuzzyNumber& w0, double kappa,
                            const ConformableContext& ctx) {
  return {kappa, +1, std::nullopt, w0, ctx};
}

LinearFCFIVP decay_problem(const TriangularFuzzyNumber& w0, double kappa,
                           const ConformableContext& ctx) {
  return {kappa, -1, std::nullopt, w0, ctx};
}

LinearFCFIVP cooling_problem(const TriangularFuzzyNumber& w0,
                             const TriangularFuzzyNumber& ambient, double kappa,
                             const ConformableContext& ctx) {
  return {kappa, -1, ambient, w0, ctx};
}

DiffCase select_case(const LinearFCFIVP& problem) {
  const double rate = problem.sign * problem.kappa;
  return rate < 0.0 ? DiffCase::CaseII : DiffCase::CaseI;
}

ClosedFormSolution solve_growth(const TriangularFuzzyNumber& w0, double kappa,
                                const ConformableContext& ctx) {
  require_positive(kappa, "solve_growth", "solve_decay");
  const std::string k = format_short(kappa);
  std::vector<DerivationStep> steps{
      {"transform", "L{T w} = " + k + " L{w}; Case I rule: s W(s) - w(a) = " + k + " W(s)"},
      {"initial-condition", "w(a) = " + show(w0)},
  };
  SymbolicTransform w(ctx, {{w0, kappa}});
  steps.push_back({"solve", "(s - " + k + ") W(s) = w0  =>  W(s) = " + w.to_string()});
  return finish(std::move(w), DiffCase::CaseI, std::move(steps));
}

ClosedFormSolution solve_decay(const TriangularFuzzyNumber& w0, double kappa,
                               const ConformableContext& ctx) {
  require_positive(kappa, "solve_decay", "solve_growth");
  const std::string k = format_short(kappa);
  std::vector<DerivationStep> steps{
      {"transform", "L{T w} = (-1)" + k + " L{w}; Case II rule: (-1)w(a) -gH (-1)s W(s) = (-1)" +
                        k + " W(s)"},
      {"initial-condition", "w(a) = " + show(w0)},
  };
  SymbolicTransform w(ctx, {{w0, -kappa}});
  steps.push_back({"solve", "W(s) = " + w.to_string()});
  return finish(std::move(w), DiffCase::CaseII, std::move(steps));
}

ClosedFormSolution solve_newton_cooling(const TriangularFuzzyNumber& w0,
                                        const TriangularFuzzyNumber& ambient,
                                        double kappa, const ConformableContext& ctx) {
  if (!(kappa > 0.0)) {
    throw UnsupportedProblem("Newton cooling needs kappa > 0, got " + format_short(kappa));
  }
  const TFN difference = hukuhara_difference(w0, ambient);
  const std::string k = format_short(kappa);
  std::vector<DerivationStep> steps{
      {"transform", "L{T w} = (-1)" + k + " (L{w} - L{M}); L{M} = M/s; Case II rule on the left"},
      {"initial-condition", "w(a) = " + show(w0) + ", M = " + show(ambient) +
                                ", w0 - M = " + show(difference)},
  };
  SymbolicTransform w(ctx, {{difference, -kappa}, {ambient, 0.0}});
  steps.push_back({"solve", "W(s) = " + w.to_string()});
  return finish(std::move(w), DiffCase::CaseII, std::move(steps));
}

ClosedFormSolution solve(const LinearFCFIVP& problem) {
  if (problem.sign != 1 && problem.sign != -1) {
    throw UnsupportedProblem("sign must be +1 or -1");
  }
  if (!std::isfinite(problem.kappa)) throw UnsupportedProblem("kappa must be finite");
  if (problem.ambient) {
    if (problem.sign != -1) {
      throw UnsupportedProblem("an ambient term is only supported as (-1) kappa (w - M)");
    }
    return solve_newton_cooling(problem.w0, *problem.ambient, problem.kappa, problem.ctx);
  }
  const double rate = problem.sign * problem.kappa;
  if (rate > 0.0) return solve_growth(problem.w0, rate, problem.ctx);
  if (rate < 0.0) return solve_decay(problem.w0, -rate, problem.ctx);
  std::vector<DerivationStep> steps{
      {"transform", "L{T w} = 0; Case I rule: s W(s) - w(a) = 0"},
      {"initial-condition", "w(a) = " + show(problem.w0)},
  };
  SymbolicTransform w(problem.ctx, {{problem.w0, 0.0}});
  steps.push_back({"solve", "W(s) = " + w.to_string()});
  return finish(std::move(w), DiffCase::CaseI, std::move(steps));
}

FunctionForm cooling_form(const TriangularFuzzyNumber& difference,
                          const TriangularFuzzyNumber& ambient, double kappa,
                          const ConformableContext& ctx) {
  return FunctionForm(ctx, {{difference, Basis::ConformableExp, -kappa, 0.0},
                            {ambient, Basis::Constant, 0.0, 0.0}});
}

ResidualReport check_residual(const LinearFCFIVP& problem, const FunctionForm& solution,
                              DiffCase expected, double span, std::size_t grid_n) {
  if (!(span > 0.0) || grid_n < 1) throw DomainError("residual grid must be non-empty");
  const ConformableContext& ctx = problem.ctx;
  const FuzzyFunction f = solution.to_function();
  ResidualReport report;
  report.grid_points = grid_n;
  for (std::size_t k = 1; k <= grid_n; ++k) {
    const double tau = ctx.basepoint() + span * static_cast<double>(k) / grid_n;
    const TFN w = solution(tau);
    const GHDiffResult lhs = conformable_derivative(f, ctx, tau);
    const TFN rhs = problem.rhs(w);
    const double scaled = hausdorff_distance(lhs.value, rhs) /
                          (1.0 + std::max(w.magnitude(), rhs.magnitude()));
    if (scaled > report.max_scaled_residual) {
      report.max_scaled_residual = scaled;
      report.worst_tau = tau;
    }
    if (lhs.diff_case != expected && !lhs.value.is_crisp()) ++report.case_mismatches;
  }
  report.initial_residual = hausdorff_distance(solution(ctx.basepoint()), problem.w0);
  report.passed = report.max_scaled_residual < 1e-6 && report.case_mismatches == 0 &&
                  report.initial_residual <= 1e-12 * (1.0 + problem.w0.magnitude());
  return report;
}

}  // namespace fuzzcal
