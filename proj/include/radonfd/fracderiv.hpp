#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "radonfd/special.hpp"

namespace radonfd {

/// A one-variable function h on [0, ∞) with compact support [0, T], the
/// input to fractional differentiation at 0.
struct SectionFunction {
  /// h(t) for t >= 0; must be re-entrant.
  std::function<double(double)> evaluate;
  /// h(t) = 0 for t > support_radius.
  double support_radius = 1.0;
  /// Highest derivative order available at 0 (finite differences stop at 4).
  int max_smoothness = 4;
  /// h represents an even function of t; odd derivatives at 0 vanish.
  bool even = false;
  /// Optional exact Taylor coefficients h^{(k)}(0)/k! for k <= analytic_order.
  std::function<double(int)> analytic_coefficient;
  int analytic_order = -1;
  /// Sorted points of (0, T) where h is only piecewise smooth; integrals are
  /// split there and finite differences stay below the first one.
  std::vector<double> breakpoints;

  double operator()(double t) const { return t > support_radius ? 0.0 : evaluate(t); }
  bool has_analytic(int order) const { return analytic_coefficient && analytic_order >= order; }
};

namespace section {
/// e^{-t} on [0, T] (not even; all derivatives known).
SectionFunction exp_neg(double T);
/// scale * (1 - (t/radius)^2)^a on [0, radius], even, with the binomial series at 0.
SectionFunction power_profile(double a, double scale = 1.0, double radius = 1.0);
/// |B_2^{n-1}| (1 - t^2)^{(n-1)/2}: the parallel section function of B_2^n.
SectionFunction ball_section(int n);
/// 1 on [0, T] (even, constant).
SectionFunction indicator(double T = 1.0);
/// Same function with the analytic derivative oracle removed.
SectionFunction without_oracle(SectionFunction h);
/// alpha h1 + beta h2 (support is the larger of the two).
SectionFunction linear_combination(double alpha, const SectionFunction& h1, double beta, const SectionFunction& h2);
/// Named test functions: exp-neg, one-minus-t2, power, ball-section, indicator.
SectionFunction by_name(std::string_view name, double T, double param);
}  // namespace section

enum class FracRoute { General, Even, Negative, Classical };
std::string_view to_string(FracRoute route);

struct FracDiagnostics {
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
  double split_point = 0.0;  // end of the near-zero piece [0, split]
  std::string near_zero_model;  // "series", "fit" or "none"
  double estimated_error = 0.0;  // on value
  double bracket_error = 0.0;    // on the regularized integral
  bool converged = true;
};

struct FracDerivResult {
  double value = 0.0;    // h^{(q)}(0)
  double bracket = 0.0;  // Γ(-q) h^{(q)}(0), the regularized integral (NaN on the classical route)
  double q = 0.0;
  int m_used = 0;
  FracRoute route = FracRoute::General;
  FracDiagnostics diagnostics;
};

struct FracDerivOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 2000;
  /// Step of the finite-difference stencils as a fraction of min(T, 1).
  double fd_step_fraction = 1e-2;
  int fd_levels = 3;
};

/// [h(0), h'(0), ..., h^{(m-1)}(0)], analytic when available, else central
/// (even h) or forward finite differences with Richardson extrapolation.
std::vector<double> taylor_coeffs_at_zero(const SectionFunction& h, int m, const FracDerivOptions& options = {});

/// Three-term regularized form, -1 < q < m, q not in {0, ..., m-1}.
FracDerivResult frac_deriv_at_zero(const SectionFunction& h, const FractionalOrder& q, int m,
                                   const FracDerivOptions& options = {});
/// Single-integral form for even h with even m and m-2 < q < m.
FracDerivResult frac_deriv_even(const SectionFunction& h, const FractionalOrder& q, int m,
                                const FracDerivOptions& options = {});
/// -1 < q < 0: (1/Γ(-q)) ∫ t^{-1-q} h(t) dt.
FracDerivResult frac_deriv_neg(const SectionFunction& h, const FractionalOrder& q,
                               const FracDerivOptions& options = {});
/// (-1)^k h^{(k)}(0).
double classical_deriv_at_zero(const SectionFunction& h, int k, const FracDerivOptions& options = {});

/// Smallest even integer strictly greater than q.
int default_order_m(double q);

/// Dispatches on q: integer -> classical, (-1,0) -> negative form, even h ->
/// even form, otherwise the general form with the default m.
FracDerivResult frac_deriv(const SectionFunction& h, const FractionalOrder& q, const FracDerivOptions& options = {});

struct NormalizedDerivative {
  double normalized = 0.0;  // (1/cos(πq/2)) h^{(q)}(0), continuous across odd q
  double raw = 0.0;         // h^{(q)}(0)
  FracDerivResult detail;
};

/// Normalized derivative. At odd integer orders (continuous_limit orders) the
/// raw value is 0 and the normalized value is the limit, computed from the
/// regularized integral via 1/(Γ(-q) cos(πq/2)) = -(2/π) sin(πq/2) Γ(1+q).
NormalizedDerivative normalized_frac_deriv(const SectionFunction& h, const FractionalOrder& q,
                                           const FracDerivOptions& options = {});

}  // namespace radonfd
