#pragma once

// Special functions and the closed-form constants built on top of them.
// Every product of powers and gamma values is assembled in log space and
// exponentiated once.

namespace radonfd {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDefaultGuardRadius = 1e-6;

/// Order q of a fractional derivative.
///
/// Orders within guard_radius of an odd integer are rejected at construction:
/// there cos(πq/2) vanishes and the normalized derivative is 0/0. An order
/// built with continuous_limit() may sit on an odd integer; it is only
/// meaningful for normalized quantities, which extend continuously there.
class FractionalOrder {
 public:
  explicit FractionalOrder(double q, double guard_radius = kDefaultGuardRadius);

  static FractionalOrder continuous_limit(double q,
                                          double guard_radius = kDefaultGuardRadius);

  double value() const noexcept { return q_; }
  double guard_radius() const noexcept { return guard_; }
  bool is_limit_order() const noexcept { return limit_; }

  /// True when |q - (2k+1)| <= guard_radius for some k >= 0.
  bool near_odd_integer() const noexcept;
  /// Nearest non-negative integer k with |q - k| <= tol, or -1.
  int near_integer(double tol) const noexcept;

 private:
  FractionalOrder(double q, double guard_radius, bool limit);

  double q_;
  double guard_;
  bool limit_;
};

/// sin(πx) and cos(πx) with exact argument reduction (exact zeros at integers
/// and half-integers respectively).
double sin_pi(double x);
double cos_pi(double x);

/// ln Γ(x) for x > 0.
double log_gamma(double x);

/// 1/Γ(-q) for q > -1, q not a non-negative integer.
double reciprocal_gamma_negative(double q);

/// Constant C with (|x|^λ)^∧(ξ) = C |ξ|^{-λ-n}, for -n < λ < 0.
double fourier_power_constant(double lambda, int n);

double ball_volume(int n);
double log_ball_volume(int n);
double sphere_surface(int n);

/// Un-normalized fractional derivative at 0 of the parallel section function
/// of the unit Euclidean ball (cos(πq/2) factor included), -1 < q < n-1.
double ball_frac_deriv_closed_form(int n, const FractionalOrder& q);

/// Normalized derivative (1/cos(πq/2)) (Rχ)^{(q)}(0) for the volume-one ball,
/// 0 <= q < n-1. Continuous across odd q.
double volume1_ball_value(int n, const FractionalOrder& q);

/// Simplified slicing constant n / ((n-q-1) 2^q π^{(q-1)/2} Γ((q+1)/2)).
double theorem2_constant(int n, const FractionalOrder& q);

/// Unsimplified constant of the slicing inequality, before the log-convexity
/// estimate; never exceeds theorem2_constant().
double theorem2_exact_constant(int n, const FractionalOrder& q);

/// C sqrt(n log^3(ne/q) / q), 1 <= q <= n-1.
double kpz_dovr_bound(int n, double q, double C);

/// (c (q+1) / sqrt(n log^3(ne/(q+1))))^{q+1}, 0 <= q <= n-2.
double theorem1_lower_bound(int n, const FractionalOrder& q, double c);

}  // namespace radonfd
