#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace fuzzcal {

/// Triangular fuzzy number (a, b, c): membership rises linearly from the
/// left end `a` to the peak `b` and falls back to zero at the right end `c`.
///
/// Construction always enforces a <= b <= c, so every live value is a member
/// of the triangular class. Values are immutable.
class TriangularFuzzyNumber {
 public:
  /// Crisp zero (0, 0, 0).
  constexpr TriangularFuzzyNumber() = default;

  /// Throws NotTriangular unless left <= peak <= right (NaN is rejected).
  TriangularFuzzyNumber(double left, double peak, double right);

  /// Crisp number (v, v, v).
  static TriangularFuzzyNumber crisp(double v) { return {v, v, v}; }

  /// std::nullopt instead of throwing when the ordering fails.
  static std::optional<TriangularFuzzyNumber> try_make(double left, double peak,
                                                       double right);

  /// Accepts ordering violations up to `tol` and snaps them closed:
  /// a > c within tol collapses both to their midpoint, then the peak is
  /// clamped into [a, c]. Larger violations throw NotTriangular.
  static TriangularFuzzyNumber snapped(double left, double peak, double right,
                                       double tol);

  constexpr double left() const noexcept { return left_; }
  constexpr double peak() const noexcept { return peak_; }
  constexpr double right() const noexcept { return right_; }

  /// Support width c - a.
  constexpr double width() const noexcept { return right_ - left_; }
  constexpr bool is_crisp() const noexcept {
    return left_ == peak_ && peak_ == right_;
  }
  /// Largest absolute component.
  double magnitude() const noexcept;

  friend constexpr bool operator==(const TriangularFuzzyNumber&,
                                   const TriangularFuzzyNumber&) = default;

 private:
  double left_ = 0.0;
  double peak_ = 0.0;
  double right_ = 0.0;
};

using TFN = TriangularFuzzyNumber;

/// Closed interval [lo, hi] at membership level r.
struct RCutInterval {
  double lo;
  double hi;
  double level;

  double width() const noexcept { return hi - lo; }
  bool contains(const RCutInterval& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }
};

/// Which branch of the generalized Hukuhara construction holds.
enum class DiffCase { CaseI, CaseII };

/// Result of a gH-difference or gH-derivative, tagged with its case.
struct GHDiffResult {
  TriangularFuzzyNumber value;
  DiffCase diff_case = DiffCase::CaseI;
  /// Set by numerical derivatives that fell back to a one-sided stencil at a
  /// domain boundary. Always false for gh_difference.
  bool one_sided = false;
};

/// Level set [a + r(b - a), c - r(c - b)]. Throws DomainError unless r in [0,1].
RCutInterval r_cut(const TriangularFuzzyNumber& p, double r);

/// Componentwise sum p + q.
TriangularFuzzyNumber add(const TriangularFuzzyNumber& p,
                          const TriangularFuzzyNumber& q);

/// lambda * p, swapping the ends when lambda < 0.
TriangularFuzzyNumber scalar_mul(double lambda, const TriangularFuzzyNumber& p);

/// Generalized Hukuhara difference p -gH q.
///
/// Case I yields r with p = q + r; Case II yields r with q = p + (-1) r.
/// When both are valid (equal widths) Case I is returned. Throws
/// NotTriangular when neither candidate is a triangular number.
GHDiffResult gh_difference(const TriangularFuzzyNumber& p,
                           const TriangularFuzzyNumber& q);

/// Hukuhara difference p - q: the Case I branch only.
/// Throws NotTriangular when width(p) < width(q).
TriangularFuzzyNumber hukuhara_difference(const TriangularFuzzyNumber& p,
                                          const TriangularFuzzyNumber& q);

/// Hausdorff distance sup_r d_H([p]^r, [q]^r). For triangular numbers the
/// supremum sits at r = 0 or r = 1, so this is the max component deviation.
double hausdorff_distance(const TriangularFuzzyNumber& p,
                          const TriangularFuzzyNumber& q);

/// Equality within `rel_tol * max(1, |p|, |q|)` on each component.
bool approx_equal(const TriangularFuzzyNumber& p, const TriangularFuzzyNumber& q,
                  double rel_tol = 1e-12);

inline TriangularFuzzyNumber operator+(const TriangularFuzzyNumber& p,
                                       const TriangularFuzzyNumber& q) {
  return add(p, q);
}
inline TriangularFuzzyNumber operator*(double lambda,
                                       const TriangularFuzzyNumber& p) {
  return scalar_mul(lambda, p);
}

const char* to_string(DiffCase c) noexcept;
std::string to_string(const TriangularFuzzyNumber& p);
std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& p);
std::ostream& operator<<(std::ostream& os, DiffCase c);

}  // namespace fuzzcal
