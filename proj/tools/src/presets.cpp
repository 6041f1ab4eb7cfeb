#include "fuzzcal_cli/presets.hpp"

#include <numbers>

namespace fuzzcal::cli {

std::vector<double> Grid::nodes() const {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(k + 1 == count ? stop
                                 : start + (stop - start) * static_cast<double>(k) /
                                               static_cast<double>(count - 1));
  }
  return out;
}

namespace {

std::vector<Preset> build() {
  constexpr double pi = std::numbers::pi;
  std::vector<Preset> all;

  all.push_back({"yogurt",
                 "bacterial growth, w0 = (516, 540, 598), kappa = 1/30, alpha = 1/5",
                 growth_problem(TFN(516, 540, 598), 1.0 / 30.0, ConformableContext(0.2)),
                 std::nullopt,
                 {0.0, 1.0, 11},
                 {0.1, 1.0, 10},
                 {0.0, 1.0, 1024},
                 {1.0, 2.0, 10.0}});

  all.push_back({"drug",
                 "single-compartment elimination, w0 = (3.97, 4.3, 5.1), kappa = 0.5, alpha = 1/2",
                 decay_problem(TFN(3.97, 4.3, 5.1), 0.5, ConformableContext(0.5)),
                 std::nullopt,
                 {0.0, 10.0, 21},
                 {0.5, 10.0, 20},
                 {0.0, 10.0, 1024},
                 {1.0, 2.0, 10.0}});

  all.push_back({"cooling",
                 "Newton cooling, w0 = (59.1, 70, 80.6), M = (6.8, 7, 7.85), kappa = 1/20, alpha = 1/2",
                 cooling_problem(TFN(59.1, 70, 80.6), TFN(6.8, 7, 7.85), 1.0 / 20.0,
                                 ConformableContext(0.5)),
                 std::nullopt,
                 {0.0, 100.0, 21},
                 {5.0, 100.0, 20},
                 {0.0, 100.0, 1024},
                 {1.0, 2.0, 10.0}});

  const ConformableContext half(0.5);
  all.push_back({"sines",
                 "(2.3 sin tau, 5.6 sin tau, 9.7 sin tau) on [0, pi], alpha = 1/2",
                 std::nullopt,
                 FunctionForm(half, {Term{TFN(2.3, 5.6, 9.7), Basis::Sine, 1.0, 0.0}},
                              Domain{0.0, pi}),
                 {0.0, pi, 33},
                 {0.01, pi - 0.01, 32},
                 {0.0, pi, 1024},
                 {}});

  all.push_back({"constant",
                 "constant (1, 2, 3), alpha = 1/2",
                 std::nullopt,
                 FunctionForm(half, {Term{TFN(1, 2, 3), Basis::Constant, 0.0, 0.0}}),
                 {0.0, 1.0, 11},
                 {0.1, 1.0, 10},
                 {0.0, 1.0, 1024},
                 {1.0, 2.0, 5.0}});
  return all;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build();
  return all;
}

const Preset* find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace fuzzcal::cli
