#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "fuzzcal/fuzzcal.hpp"

using namespace fuzzcal;

namespace {

const TFN kYogurt(516, 540, 598);

LinearFCFIVP yogurt() { return growth_problem(kYogurt, 1.0 / 30.0, ConformableContext(0.2)); }

FuzzyFunction sines() {
  return FunctionForm(ConformableContext(0.5), {Term{TFN(2.3, 5.6, 9.7), Basis::Sine, 1.0, 0.0}},
                      Domain{0.0, std::numbers::pi})
      .to_function();
}

}  // namespace

static void BM_GhDifference(benchmark::State& state) {
  const TFN p(1, 4, 9);
  const TFN q(0.5, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gh_difference(p, q));
}
BENCHMARK(BM_GhDifference);

static void BM_ConformableDerivative(benchmark::State& state) {
  const auto f = solve(yogurt()).expression();
  const ConformableContext ctx(0.2);
  double tau = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(conformable_derivative(f, ctx, tau));
    tau = tau < 1.0 ? tau + 1e-3 : 0.5;
  }
}
BENCHMARK(BM_ConformableDerivative);

static void BM_SwitchingPoints(benchmark::State& state) {
  const auto f = sines();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_switching_points(f, 0.0, std::numbers::pi, n));
}
BENCHMARK(BM_SwitchingPoints)->Arg(64)->Arg(1024)->Arg(8192);

static void BM_ConformableIntegral(benchmark::State& state) {
  const auto f = solve(yogurt()).expression();
  const ConformableContext ctx(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(conformable_integral(f, ctx, 1.0));
}
BENCHMARK(BM_ConformableIntegral);

static void BM_LaplaceNumeric(benchmark::State& state) {
  const auto f = solve(yogurt()).expression();
  const ConformableContext ctx(0.2);
  const ExpBound bound = default_exp_bound(f, ctx);
  const double s = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laplace_numeric(f, ctx, s, bound));
}
BENCHMARK(BM_LaplaceNumeric)->Arg(1)->Arg(10);

static void BM_SolveAndCheck(benchmark::State& state) {
  const auto p = yogurt();
  for (auto _ : state) {
    const auto sol = solve(p);
    benchmark::DoNotOptimize(check_residual(p, sol.form, sol.diff_case));
  }
}
BENCHMARK(BM_SolveAndCheck)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
