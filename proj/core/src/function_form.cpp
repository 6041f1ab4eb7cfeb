#include "fuzzcal/function_form.hpp"

#include <cmath>
#include <cstdio>

#include "fuzzcal/errors.hpp"

namespace fuzzcal {

const char* to_string(Basis b) noexcept {
  switch (b) {
    case Basis::Constant: return "constant";
    case Basis::ConformableExp: return "exp_conformable";
    case Basis::Sine: return "sin";
    case Basis::Cosine: return "cos";
  }
  return "unknown";
}

double Term::basis_value(const ConformableContext& ctx, double tau) const {
  switch (basis) {
    case Basis::Constant: return 1.0;
    case Basis::ConformableExp: return std::exp(rate * ctx.conformable_time(tau));
    case Basis::Sine: return std::sin(rate * tau + phase);
    case Basis::Cosine: return std::cos(rate * tau + phase);
  }
  throw InvalidInput("unknown basis");
}

FunctionForm::FunctionForm(ConformableContext ctx, std::vector<Term> terms)
    : FunctionForm(ctx, std::move(terms), Domain{ctx.basepoint()}) {}

FunctionForm::FunctionForm(ConformableContext ctx, std::vector<Term> terms,
                           Domain domain)
    : ctx_(ctx), terms_(std::move(terms)), domain_(domain) {
  if (!(domain_.lo <= domain_.hi)) throw DomainError("empty function domain");
  for (const Term& t : terms_) {
    if (t.basis == Basis::ConformableExp && domain_.lo < ctx_.basepoint()) {
      throw DomainError("conformable exponential is undefined before the basepoint");
    }
  }
}

TriangularFuzzyNumber FunctionForm::operator()(double tau) const {
  if (!domain_.contains(tau)) {
    throw DomainError("tau = " + std::to_string(tau) + " outside form domain");
  }
  if (terms_.empty()) return {};
  TFN acc = scalar_mul(terms_.front().basis_value(ctx_, tau), terms_.front().coefficient);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    acc = acc + scalar_mul(terms_[i].basis_value(ctx_, tau), terms_[i].coefficient);
  }
  return acc;
}

FuzzyFunction FunctionForm::to_function() const {
  return FuzzyFunction([form = *this](double tau) { return form(tau); }, domain_);
}

std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

std::string show(const TFN& p) {
  return "(" + format_short(p.left()) + ", " + format_short(p.peak()) + ", " +
         format_short(p.right()) + ")";
}

std::string shifted_tau(const ConformableContext& ctx) {
  return ctx.basepoint() == 0.0 ? "tau" : "(tau - " + format_short(ctx.basepoint()) + ")";
}

std::string angle(const Term& t) {
  std::string s = t.rate == 1.0 ? "tau" : format_short(t.rate) + "*tau";
  if (t.phase != 0.0) s += (t.phase > 0 ? " + " : " - ") + format_short(std::abs(t.phase));
  return s;
}

}  // namespace

std::string FunctionForm::to_string() const {
  if (terms_.empty()) return "(0, 0, 0)";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i > 0) out += " + ";
    out += show(t.coefficient);
    switch (t.basis) {
      case Basis::Constant: break;
      case Basis::ConformableExp:
        if (ctx_.alpha() == 1.0) {
          out += "*exp(" + format_short(t.rate) + "*" + shifted_tau(ctx_) + ")";
        } else {
          out += "*exp(" + format_short(t.rate) + "*" + shifted_tau(ctx_) + "^" +
                 format_short(ctx_.alpha()) + "/" + format_short(ctx_.alpha()) + ")";
        }
        break;
      case Basis::Sine: out += "*sin(" + angle(t) + ")"; break;
      case Basis::Cosine: out += "*cos(" + angle(t) + ")"; break;
    }
  }
  return out;
}

}  // namespace fuzzcal
