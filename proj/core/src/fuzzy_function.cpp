#include "fuzzcal/fuzzy_function.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "fuzzcal/errors.hpp"

namespace fuzzcal {

FuzzyFunction::FuzzyFunction(Evaluator eval, Domain domain)
    : eval_(std::move(eval)), domain_(domain) {
  if (!eval_) throw InvalidInput("FuzzyFunction needs an evaluator");
  if (!(domain_.lo <= domain_.hi)) {
    throw DomainError("FuzzyFunction domain must satisfy lo <= hi");
  }
}

FuzzyFunction FuzzyFunction::from_components(Component w1, Component w2,
                                             Component w3, Domain domain) {
  if (!w1 || !w2 || !w3) throw InvalidInput("missing component callable");
  return FuzzyFunction(
      [w1 = std::move(w1), w2 = std::move(w2), w3 = std::move(w3)](double tau) {
        const double a = w1(tau);
        const double b = w2(tau);
        const double c = w3(tau);
        const double slack =
            1e-12 * std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
        return TriangularFuzzyNumber::snapped(a, b, c, slack);
      },
      domain);
}

FuzzyFunction FuzzyFunction::from_samples(
    std::vector<std::pair<double, TriangularFuzzyNumber>> samples) {
  if (samples.size() < 2) {
    throw InvalidInput("sampled FuzzyFunction needs at least two samples");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].first > samples[i - 1].first)) {
      throw InvalidInput("sample abscissae must be strictly increasing");
    }
  }
  const Domain domain{samples.front().first, samples.back().first};
  auto table = std::make_shared<const std::vector<std::pair<double, TFN>>>(
      std::move(samples));
  return FuzzyFunction(
      [table](double tau) {
        const auto& t = *table;
        auto it = std::upper_bound(
            t.begin(), t.end(), tau,
            [](double x, const auto& sample) { return x < sample.first; });
        if (it == t.begin()) return t.front().second;
        if (it == t.end()) return t.back().second;
        const auto& [t0, v0] = *(it - 1);
        const auto& [t1, v1] = *it;
        const double w = (tau - t0) / (t1 - t0);
        // Convex blend of two ordered triples stays ordered.
        auto lerp = [w](double x, double y) { return x + w * (y - x); };
        return TriangularFuzzyNumber::snapped(
            lerp(v0.left(), v1.left()), lerp(v0.peak(), v1.peak()),
            lerp(v0.right(), v1.right()),
            1e-15 * std::max({1.0, v0.magnitude(), v1.magnitude()}));
      },
      domain);
}

FuzzyFunction FuzzyFunction::constant(const TriangularFuzzyNumber& value,
                                      Domain domain) {
  return FuzzyFunction([value](double) { return value; }, domain);
}

TriangularFuzzyNumber FuzzyFunction::operator()(double tau) const {
  if (!domain_.contains(tau)) {
    throw DomainError("tau = " + std::to_string(tau) +
                      " outside function domain [" + std::to_string(domain_.lo) +
                      ", " + std::to_string(domain_.hi) + "]");
  }
  return eval_(tau);
}

FuzzyFunction operator+(const FuzzyFunction& f, const FuzzyFunction& g) {
  const Domain d{std::max(f.domain().lo, g.domain().lo),
                 std::min(f.domain().hi, g.domain().hi)};
  if (!(d.lo <= d.hi)) throw DomainError("sum of functions with disjoint domains");
  return FuzzyFunction(
      [f, g](double tau) { return f.eval_unchecked(tau) + g.eval_unchecked(tau); },
      d);
}

FuzzyFunction operator*(double lambda, const FuzzyFunction& f) {
  return FuzzyFunction(
      [lambda, f](double tau) { return scalar_mul(lambda, f.eval_unchecked(tau)); },
      f.domain());
}

}  // namespace fuzzcal
