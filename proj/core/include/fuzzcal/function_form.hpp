#pragma once

#include <string>
#include <vector>

#include "fuzzcal/context.hpp"
#include "fuzzcal/fuzzy_function.hpp"
#include "fuzzcal/fuzzy_number.hpp"

namespace fuzzcal {

/// Real basis functions available to closed-form fuzzy functions.
enum class Basis {
  Constant,        ///< 1
  ConformableExp,  ///< exp(rate * (tau - a)^alpha / alpha)
  Sine,            ///< sin(rate * tau + phase)
  Cosine,          ///< cos(rate * tau + phase)
};

const char* to_string(Basis b) noexcept;

/// coefficient (.) basis(tau): the real basis value scales the fuzzy
/// coefficient, flipping its ends where the basis is negative.
struct Term {
  TriangularFuzzyNumber coefficient;
  Basis basis = Basis::Constant;
  double rate = 1.0;
  double phase = 0.0;

  double basis_value(const ConformableContext& ctx, double tau) const;
};

/// Finite fuzzy sum of terms: the closed vocabulary used for problem
/// solutions, preset functions and symbolic transform pairs. The empty sum is
/// the zero function.
class FunctionForm {
 public:
  /// Domain defaults to [basepoint, +inf).
  FunctionForm(ConformableContext ctx, std::vector<Term> terms);
  FunctionForm(ConformableContext ctx, std::vector<Term> terms, Domain domain);

  TriangularFuzzyNumber operator()(double tau) const;
  FuzzyFunction to_function() const;

  const ConformableContext& context() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Domain& domain() const noexcept { return domain_; }

  /// Human-readable expression in tau, e.g.
  /// "(516, 540, 598)*exp(0.0333333333333333*tau^0.2/0.2)".
  std::string to_string() const;

 private:
  ConformableContext ctx_;
  std::vector<Term> terms_;
  Domain domain_;
};

/// Number rendering used in expressions (15 significant digits).
std::string format_short(double v);

}  // namespace fuzzcal
