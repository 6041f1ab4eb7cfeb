#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "fuzzcal/fuzzy_number.hpp"

namespace fuzzcal {

/// Closed interval of the independent variable; `hi` may be +infinity.
struct Domain {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double tau) const noexcept { return tau >= lo && tau <= hi; }
};

/// Map tau -> triangular fuzzy number over a closed domain.
///
/// Backed either by a single evaluator returning all three components, by
/// three scalar component callables, or by a sampled table with piecewise
/// linear interpolation. Copies share the underlying callable, which must be
/// pure.
class FuzzyFunction {
 public:
  using Evaluator = std::function<TriangularFuzzyNumber(double)>;
  using Component = std::function<double(double)>;

  FuzzyFunction(Evaluator eval, Domain domain);

  /// (w1(tau), w2(tau), w3(tau)). Ordering w1 <= w2 <= w3 is checked on every
  /// evaluation (relative slack 1e-12); violations throw NotTriangular.
  static FuzzyFunction from_components(Component w1, Component w2, Component w3,
                                       Domain domain);

  /// Piecewise linear interpolation through (tau, value) samples. Needs at
  /// least two samples with strictly increasing tau.
  static FuzzyFunction from_samples(
      std::vector<std::pair<double, TriangularFuzzyNumber>> samples);

  /// Constant function over `domain`.
  static FuzzyFunction constant(const TriangularFuzzyNumber& value,
                                Domain domain = {});

  /// Throws DomainError outside domain().
  TriangularFuzzyNumber operator()(double tau) const;

  /// Evaluation without the domain check; used by stencils that already
  /// validated their nodes.
  TriangularFuzzyNumber eval_unchecked(double tau) const { return eval_(tau); }

  const Domain& domain() const noexcept { return domain_; }

  /// w3(tau) - w1(tau).
  double diameter(double tau) const { return (*this)(tau).width(); }

 private:
  Evaluator eval_;
  Domain domain_;
};

/// Pointwise sum over the intersection of the two domains.
FuzzyFunction operator+(const FuzzyFunction& f, const FuzzyFunction& g);

/// Pointwise scalar multiple.
FuzzyFunction operator*(double lambda, const FuzzyFunction& f);

}  // namespace fuzzcal
