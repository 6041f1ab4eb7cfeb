#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fuzzcal/conformable.hpp"
#include "fuzzcal/errors.hpp"
#include "fuzzcal/io.hpp"
#include "fuzzcal/ivp.hpp"
#include "fuzzcal/laplace.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fuzzcal;

namespace {

constexpr double kKappa = 1.0 / 30.0;
const TFN kYogurt(516, 540, 598);

bool close(const TFN& got, const TFN& want, double tol) {
  return hausdorff_distance(got, want) <= tol * std::max(1.0, want.magnitude());
}

oracle::Triple over(const TFN& p, double d) {
  return {p.left() / d, p.peak() / d, p.right() / d};
}

FunctionForm exp_form(const TFN& k, double rate, const ConformableContext& ctx) {
  return FunctionForm(ctx, {Term{k, Basis::ConformableExp, rate, 0.0}});
}

}  // namespace

TEST_CASE("laplace_numeric of a constant") {
  for (double alpha : {0.2, 0.5, 1.0}) {
    const auto w = laplace_numeric(FuzzyFunction::constant(TFN(1, 2, 3)),
                                   ConformableContext(alpha), 2.0);
    CHECK(w.s == 2.0);
    CHECK(support::max_rel_err(w.value, {0.5, 1.0, 1.5}) <= 1e-9);
  }
}

TEST_CASE("laplace_numeric of the growth solution") {
  const ConformableContext ctx(0.2);
  const auto f = exp_form(kYogurt, kKappa, ctx).to_function();
  const auto w = laplace_numeric(f, ctx, 1.0);
  CHECK(support::max_rel_err(w.value, over(kYogurt, 29.0 / 30.0)) <= 1e-9);
  CHECK_THROWS_AS(laplace_numeric(f, ctx, 0.02), DivergentTransform);
  try {
    laplace_numeric(f, ctx, 0.01);
  } catch (const DivergentTransform& e) {
    CHECK(e.s() == 0.01);
    CHECK(e.abscissa() == doctest::Approx(kKappa).epsilon(0.05));
  }
}

TEST_CASE("laplace_numeric of a crisp function is crisp") {
  const ConformableContext ctx(0.5);
  const auto f = exp_form(TFN::crisp(2.5), -0.3, ctx).to_function();
  for (double s : {0.5, 1.0, 4.0}) {
    const TFN v = laplace_numeric(f, ctx, s).value;
    CHECK(v.width() == 0.0);
    CHECK(v.peak() == doctest::Approx(2.5 / (s + 0.3)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(laplace_numeric(f, ctx, -0.1), DivergentTransform);
  CHECK_THROWS_AS(laplace_numeric(f, ctx, 0.0), DivergentTransform);
}

TEST_CASE("laplace_numeric needs a function on [a, inf)") {
  const ConformableContext ctx(0.5);
  CHECK_THROWS_AS(laplace_numeric(FuzzyFunction::constant(TFN(1, 2, 3), {0.0, 5.0}), ctx, 1.0),
                  DomainError);
  CHECK_THROWS_AS(
      laplace_numeric(FuzzyFunction::constant(TFN(1, 2, 3), {0.5}), ctx, 1.0,
                      ExpBound{3.0, 0.0, 0.5}),
      DomainError);
}

TEST_CASE("laplace_symbolic table") {
  const ConformableContext ctx(0.5);
  const TFN m(6.8, 7, 7.85);
  const auto k = laplace_symbolic(FunctionForm(ctx, {Term{m, Basis::Constant, 0.0, 0.0}}));
  CHECK(k.abscissa() == 0.0);
  CHECK(k.to_string() == "(6.8, 7, 7.85)/s");
  for (double s : {1.0, 2.0, 5.0}) {
    CHECK(support::max_rel_err(k(s), over(m, s)) <= 1e-15);
    CHECK(close(k(s), laplace_numeric(FuzzyFunction::constant(m), ctx, s).value, 1e-9));
  }
  CHECK_THROWS_AS(k(0.0), DivergentTransform);

  const ConformableContext yog(0.2);
  const auto e = laplace_symbolic(exp_form(TFN::crisp(1), kKappa, yog));
  CHECK(e.abscissa() == kKappa);
  CHECK(e.to_string() == "(1, 1, 1)/(s - 0.0333333333333333)");
  for (double s : {0.5, 1.0, 3.0}) {
    CHECK(e(s).peak() == doctest::Approx(1 / (s - kKappa)).epsilon(1e-15));
    CHECK(close(e(s), laplace_numeric(exp_form(TFN::crisp(1), kKappa, yog).to_function(), yog, s).value, 1e-9));
  }

  const auto zero = laplace_symbolic(FunctionForm(ctx, {}));
  CHECK(zero(0.1) == TFN());
  CHECK(zero(100.0) == TFN());
  CHECK(zero.to_string() == "(0, 0, 0)");

  CHECK_THROWS_AS(laplace_symbolic(FunctionForm(ctx, {Term{m, Basis::Sine, 1.0, 0.0}})),
                  NoSymbolicForm);
}

TEST_CASE("laplace_inverse table") {
  const ConformableContext ctx(0.2);
  const auto w = SymbolicTransform(ctx, {PoleTerm{kYogurt, kKappa}});
  const auto f = laplace_inverse(w);
  for (double tau : {0.0, 0.25, 0.5, 1.0, 7.0}) {
    const double e = std::exp(std::pow(tau, 0.2) / 6.0);
    CHECK(support::max_rel_err(f(tau), {516 * e, 540 * e, 598 * e}) <= 1e-12);
  }

  const auto k = laplace_inverse(SymbolicTransform(ctx, {PoleTerm{TFN(1, 2, 3), 0.0}}));
  CHECK(k(3.3) == TFN(1, 2, 3));
  CHECK(inverse_form(SymbolicTransform(ctx, {PoleTerm{TFN(1, 2, 3), 0.0}})).terms()[0].basis ==
        Basis::Constant);

  const ConformableContext drug(0.5, 0.5);
  const TFN w0(3.97, 4.3, 5.1);
  const auto d = laplace_inverse(SymbolicTransform(drug, {PoleTerm{w0, -0.4}}));
  for (double tau : {0.5, 1.0, 3.0}) {
    const double e = std::exp(-0.4 * std::pow(tau - 0.5, 0.5) / 0.5);
    CHECK(support::max_rel_err(d(tau), {3.97 * e, 4.3 * e, 5.1 * e}) <= 1e-12);
  }
}

TEST_CASE("round trip over every table entry") {
  const ConformableContext ctx(0.5, 0.25);
  const std::vector<FunctionForm> forms{
      FunctionForm(ctx, {}),
      FunctionForm(ctx, {Term{TFN(-1, 2, 3), Basis::Constant, 0.0, 0.0}}),
      exp_form(kYogurt, kKappa, ctx),
      exp_form(TFN(3.97, 4.3, 5.1), -0.7, ctx),
      FunctionForm(ctx, {Term{TFN(52.3, 63, 72.75), Basis::ConformableExp, -0.05, 0.0},
                         Term{TFN(6.8, 7, 7.85), Basis::Constant, 0.0, 0.0}}),
  };
  for (const auto& f : forms) {
    CAPTURE(f.to_string());
    const FunctionForm back = inverse_form(laplace_symbolic(f));
    for (int k = 0; k <= 50; ++k) {
      const double tau = 0.25 + 0.2 * k;
      CHECK(close(back(tau), f(tau), 1e-9));
    }
  }
}

TEST_CASE("laplace_of_derivative identities") {
  const ConformableContext ctx(0.2);
  const auto grow = SymbolicTransform(ctx, {PoleTerm{kYogurt, kKappa}});
  const ConformableContext half(0.5);
  const TFN w0(3.97, 4.3, 5.1);
  const auto decay = SymbolicTransform(half, {PoleTerm{w0, -kKappa}});
  for (double s : {1.0, 2.0, 10.0}) {
    const TFN lhs = laplace_of_derivative(grow, kYogurt, DiffCase::CaseI, s);
    CHECK(close(lhs, kKappa * grow(s), 1e-9));
    const TFN rhs = laplace_of_derivative(decay, w0, DiffCase::CaseII, s);
    CHECK(close(rhs, -kKappa * decay(s), 1e-9));
  }

  const TransformValue crisp{2.0, TFN::crisp(0.75)};
  CHECK(laplace_of_derivative(crisp, TFN::crisp(1), DiffCase::CaseI) ==
        laplace_of_derivative(crisp, TFN::crisp(1), DiffCase::CaseII));

  // Case I demands the Hukuhara difference to exist.
  CHECK_THROWS_AS(laplace_of_derivative(TransformValue{1.0, TFN(1, 2, 3)}, TFN(0, 2, 5),
                                        DiffCase::CaseI),
                  NotTriangular);
}

TEST_CASE("derivative-transform consistency against numerics") {
  struct Setup {
    ClosedFormSolution sol;
    LinearFCFIVP problem;
  };
  const ConformableContext ctx(0.2);
  const ConformableContext drug(0.5);
  const std::vector<LinearFCFIVP> problems{growth_problem(kYogurt, kKappa, ctx),
                                           decay_problem(TFN(3.97, 4.3, 5.1), 0.5, drug)};
  for (const auto& p : problems) {
    const ClosedFormSolution sol = solve(p);
    const FuzzyFunction f = sol.expression();
    const FuzzyFunction df = conformable_derivative_function(f, p.ctx);
    const ExpBound bound = default_exp_bound(f, p.ctx);
    for (double s : {1.0, 2.0, 10.0}) {
      const TFN lhs = laplace_numeric(df, p.ctx, s, bound, 1e-7).value;
      const TFN rhs = laplace_of_derivative(laplace_numeric(f, p.ctx, s), f(0.0), sol.diff_case);
      CHECK(hausdorff_distance(lhs, rhs) <= 1e-6 * std::max(1.0, rhs.magnitude()));
    }
  }
}

TEST_CASE("estimate_exp_bound") {
  const ConformableContext ctx(0.2);
  const auto grow = exp_form(kYogurt, kKappa, ctx).to_function();
  const ExpBound b = default_exp_bound(grow, ctx);
  CHECK(std::abs(b.c - kKappa) <= 0.05 * kKappa);
  CHECK(b.alpha == 0.2);

  const ConformableContext half(0.5);
  const auto cool =
      solve_newton_cooling(TFN(59.1, 70, 80.6), TFN(6.8, 7, 7.85), 0.05, half).expression();
  CHECK(default_exp_bound(cool, half).c <= 1e-3);

  const ExpBound z = default_exp_bound(FuzzyFunction::constant(TFN()), half);
  CHECK(z.c == 0.0);
  CHECK(z.M == std::numeric_limits<double>::epsilon());

  CHECK_THROWS_AS(estimate_exp_bound(grow, ctx, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(estimate_exp_bound(grow, ctx, 0.0, 1.0), DomainError);
}

TEST_CASE("existence bound: D(W(s), 0) <= M / (s - c)") {
  const ConformableContext ctx(0.5);
  std::vector<FuzzyFunction> fs{
      exp_form(TFN(1, 2, 3), 0.4, ctx).to_function(),
      exp_form(TFN(3.97, 4.3, 5.1), -0.5, ctx).to_function(),
      solve_newton_cooling(TFN(59.1, 70, 80.6), TFN(6.8, 7, 7.85), 0.05, ctx).expression(),
      FuzzyFunction::constant(TFN(-2, 1, 4)),
  };
  for (const auto& f : fs) {
    // Fit over the whole range actually integrated, not just the tail.
    const ExpBound b = estimate_exp_bound(f, ctx, 1e-9, ctx.tau_at(60.0), 400);
    const double c0 = std::max(0.0, b.c);
    for (double s : {c0 + 0.1, c0 + 1, c0 + 5}) {
      const TFN w = laplace_numeric(f, ctx, s, b).value;
      CHECK(w.magnitude() <= b.M / (s - b.c));
    }
  }
}

TEST_CASE("linearity of the transform") {
  const ConformableContext ctx(0.5);
  const auto f = exp_form(TFN(1, 2, 3), 0.2, ctx).to_function();
  const auto g = solve_newton_cooling(TFN(59.1, 70, 80.6), TFN(6.8, 7, 7.85), 0.05, ctx)
                     .expression();
  for (auto [a, b] : {std::pair{2.0, 0.5}, std::pair{-1.5, -3.0}}) {
    for (double s : {0.5, 2.0}) {
      const TFN lhs = a * laplace_numeric(f, ctx, s).value + b * laplace_numeric(g, ctx, s).value;
      const TFN rhs = laplace_numeric(a * f + b * g, ctx, s).value;
      CHECK(close(lhs, rhs, 1e-9));
    }
  }

  // gH variant: a widening growth minus a fixed narrow constant stays in Case I.
  const TFN k(0.5, 1, 1.2);
  const auto kf = FuzzyFunction::constant(k);
  const auto diff = FuzzyFunction([f, k](double t) { return gh_difference(f(t), k).value; }, {});
  for (double s : {0.5, 1.0, 3.0}) {
    const auto split = gh_difference(laplace_numeric(f, ctx, s).value, laplace_numeric(kf, ctx, s).value);
    CHECK(split.diff_case == DiffCase::CaseI);
    CHECK(close(split.value, laplace_numeric(diff, ctx, s).value, 1e-9));
  }
}

TEST_CASE("property: substitution lemma against the direct integral") {
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const double alpha = std::array{0.2, 0.5, 0.8}[i % 3];
    const auto fam = support::LaplaceFamily::random(alpha);
    const double s = fam.growth() + support::uniform(0.3, 3);
    const ConformableContext ctx(alpha, fam.tau0);
    const TFN sub = laplace_numeric(fam.function(), ctx, s).value;
    oracle::Triple direct;
    for (int k = 0; k < 3; ++k) {
      const auto q = oracle::oracle_quadrature([&](double y) { return fam.weighted(k, y, s); },
                                               0.0, INFINITY, 1e-12);
      if (!q.converged) ++failures;
      direct[k] = q.value;
    }
    const double scale = std::max(1.0, support::tfn(direct).magnitude());
    if (hausdorff_distance(sub, support::tfn(direct)) > 1e-8 * scale) {
      ++failures;
      MESSAGE("alpha " << alpha << " s " << s << " sub " << sub << " direct "
                       << support::tfn(direct));
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("transform table csv") {
  std::vector<TransformValue> rows{{1.0, TFN(0.5, 1, 1.5)}, {2.5, TFN(0.25, 0.5, 0.75)}};
  std::ostringstream os;
  write_transform_table(os, rows);
  CHECK(os.str() == "s,W1,W2,W3\n1,0.5,1,1.5\n2.5,0.25,0.5,0.75\n");
}
