#pragma once

namespace fuzzcal {

/// Order and basepoint shared by every conformable derivative, integral and
/// transform. Invariants: 0 < alpha <= 1, basepoint >= 0.
class ConformableContext {
 public:
  /// Throws DomainError when an invariant fails.
  ConformableContext(double alpha, double basepoint = 0.0);

  double alpha() const noexcept { return alpha_; }
  double basepoint() const noexcept { return basepoint_; }

  /// Conformable time u = (tau - a)^alpha / alpha, for tau >= a.
  double conformable_time(double tau) const;
  /// Inverse map tau = a + (alpha u)^(1/alpha), for u >= 0.
  double tau_at(double u) const;
  /// (tau - a)^(1 - alpha), the factor relating T_alpha to d/dtau.
  double prefactor(double tau) const;

  friend bool operator==(const ConformableContext&,
                         const ConformableContext&) = default;

 private:
  double alpha_;
  double basepoint_;
};

}  // namespace fuzzcal
