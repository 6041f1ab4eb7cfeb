#include "fuzzcal/fuzzy_number.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "fuzzcal/errors.hpp"

namespace fuzzcal {

namespace {

bool ordered(double a, double b, double c) { return a <= b && b <= c; }

std::string shortest(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

}  // namespace

TriangularFuzzyNumber::TriangularFuzzyNumber(double left, double peak,
                                             double right)
    : left_(left), peak_(peak), right_(right) {
  if (!ordered(left, peak, right)) {
    throw NotTriangular("not a triangular fuzzy number: (" + shortest(left) +
                        ", " + shortest(peak) + ", " + shortest(right) + ")");
  }
}

std::optional<TriangularFuzzyNumber> TriangularFuzzyNumber::try_make(
    double left, double peak, double right) {
  if (!ordered(left, peak, right)) return std::nullopt;
  return TriangularFuzzyNumber(left, peak, right);
}

TriangularFuzzyNumber TriangularFuzzyNumber::snapped(double left, double peak,
                                                     double right, double tol) {
  if (std::isnan(left) || std::isnan(peak) || std::isnan(right)) {
    throw NotTriangular("NaN component");
  }
  if (left > right) {
    if (left - right > tol) return TriangularFuzzyNumber(left, peak, right);
    const double mid = 0.5 * (left + right);
    left = right = mid;
  }
  if (peak < left - tol || peak > right + tol) {
    return TriangularFuzzyNumber(left, peak, right);
  }
  return TriangularFuzzyNumber(left, std::clamp(peak, left, right), right);
}

double TriangularFuzzyNumber::magnitude() const noexcept {
  return std::max({std::abs(left_), std::abs(peak_), std::abs(right_)});
}

RCutInterval r_cut(const TriangularFuzzyNumber& p, double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("r-cut level must lie in [0, 1], got " + shortest(r));
  }
  // Exact endpoints at the extremes, independent of rounding in the blend.
  if (r == 0.0) return {p.left(), p.right(), r};
  if (r == 1.0) return {p.peak(), p.peak(), r};
  const double lo = p.left() + r * (p.peak() - p.left());
  const double hi = p.right() - r * (p.right() - p.peak());
  return {lo, std::max(lo, hi), r};
}

TriangularFuzzyNumber add(const TriangularFuzzyNumber& p,
                          const TriangularFuzzyNumber& q) {
  return {p.left() + q.left(), p.peak() + q.peak(), p.right() + q.right()};
}

TriangularFuzzyNumber scalar_mul(double lambda, const TriangularFuzzyNumber& p) {
  if (lambda >= 0.0) {
    return {lambda * p.left(), lambda * p.peak(), lambda * p.right()};
  }
  return {lambda * p.right(), lambda * p.peak(), lambda * p.left()};
}

GHDiffResult gh_difference(const TriangularFuzzyNumber& p,
                           const TriangularFuzzyNumber& q) {
  const double dl = p.left() - q.left();
  const double dm = p.peak() - q.peak();
  const double dr = p.right() - q.right();
  if (auto r1 = TriangularFuzzyNumber::try_make(dl, dm, dr)) {
    return {*r1, DiffCase::CaseI};
  }
  if (auto r2 = TriangularFuzzyNumber::try_make(dr, dm, dl)) {
    return {*r2, DiffCase::CaseII};
  }
  throw NotTriangular("gH-difference " + to_string(p) + " -gH " + to_string(q) +
                      " is not triangular");
}

TriangularFuzzyNumber hukuhara_difference(const TriangularFuzzyNumber& p,
                                          const TriangularFuzzyNumber& q) {
  auto r = TriangularFuzzyNumber::try_make(
      p.left() - q.left(), p.peak() - q.peak(), p.right() - q.right());
  if (!r) {
    throw NotTriangular("Hukuhara difference " + to_string(p) + " - " +
                        to_string(q) + " does not exist");
  }
  return *r;
}

double hausdorff_distance(const TriangularFuzzyNumber& p,
                          const TriangularFuzzyNumber& q) {
  return std::max({std::abs(p.left() - q.left()), std::abs(p.peak() - q.peak()),
                   std::abs(p.right() - q.right())});
}

bool approx_equal(const TriangularFuzzyNumber& p, const TriangularFuzzyNumber& q,
                  double rel_tol) {
  const double scale = std::max({1.0, p.magnitude(), q.magnitude()});
  return hausdorff_distance(p, q) <= rel_tol * scale;
}

const char* to_string(DiffCase c) noexcept {
  return c == DiffCase::CaseI ? "CaseI" : "CaseII";
}

std::string to_string(const TriangularFuzzyNumber& p) {
  return "(" + shortest(p.left()) + ", " + shortest(p.peak()) + ", " +
         shortest(p.right()) + ")";
}

std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& p) {
  return os << to_string(p);
}

std::ostream& operator<<(std::ostream& os, DiffCase c) {
  return os << to_string(c);
}

}  // namespace fuzzcal
