#include "radonfd/fracderiv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "radonfd/errors.hpp"
#include "radonfd/quadrature.hpp"

namespace radonfd {

namespace {

constexpr int kOracleOrder = 60;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double factorial(int k) { return std::exp(log_gamma(k + 1.0)); }

// Binomial-series coefficient of t^{2j} in (1 - t^2)^a.
double power_series_coefficient(double a, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c *= -(a - i + 1) / i;
  return c;
}

}  // namespace

// ---------------------------------------------------------------- section functions

namespace section {

SectionFunction exp_neg(double T) {
  if (!(T > 0.0)) throw DomainError("support radius must be positive");
  SectionFunction h;
  h.evaluate = [](double t) { return std::exp(-t); };
  h.support_radius = T;
  h.max_smoothness = kOracleOrder;
  h.even = false;
  h.analytic_coefficient = [](int k) { return (k % 2 ? -1.0 : 1.0) * std::exp(-log_gamma(k + 1.0)); };
  h.analytic_order = kOracleOrder;
  return h;
}

SectionFunction power_profile(double a, double scale, double radius) {
  if (!(a >= 0.0)) throw DomainError("power profile exponent must be non-negative");
  if (!(radius > 0.0)) throw DomainError("power profile radius must be positive");
  SectionFunction h;
  h.evaluate = [a, scale, radius](double t) {
    const double u = t / radius;
    const double w = 1.0 - u * u;
    return w <= 0.0 ? 0.0 : scale * std::pow(w, a);
  };
  h.support_radius = radius;
  h.max_smoothness = kOracleOrder;
  h.even = true;
  h.analytic_coefficient = [a, scale, radius](int k) {
    return k % 2 ? 0.0 : scale * power_series_coefficient(a, k / 2) * std::pow(radius, -k);
  };
  h.analytic_order = kOracleOrder;
  return h;
}

SectionFunction ball_section(int n) {
  if (n < 2) throw DomainError("ball section needs n >= 2");
  return power_profile(0.5 * (n - 1), ball_volume(n - 1));
}

SectionFunction indicator(double T) {
  if (!(T > 0.0)) throw DomainError("support radius must be positive");
  SectionFunction h;
  h.evaluate = [](double) { return 1.0; };
  h.support_radius = T;
  h.max_smoothness = kOracleOrder;
  h.even = true;
  h.analytic_coefficient = [](int k) { return k == 0 ? 1.0 : 0.0; };
  h.analytic_order = kOracleOrder;
  return h;
}

SectionFunction without_oracle(SectionFunction h) {
  h.analytic_coefficient = nullptr;
  h.analytic_order = -1;
  h.max_smoothness = std::min(h.max_smoothness, 4);
  return h;
}

SectionFunction linear_combination(double alpha, const SectionFunction& h1, double beta, const SectionFunction& h2) {
  SectionFunction h;
  h.evaluate = [alpha, beta, h1, h2](double t) { return alpha * h1(t) + beta * h2(t); };
  h.support_radius = std::max(h1.support_radius, h2.support_radius);
  h.max_smoothness = std::min(h1.max_smoothness, h2.max_smoothness);
  h.even = h1.even && h2.even;
  std::merge(h1.breakpoints.begin(), h1.breakpoints.end(), h2.breakpoints.begin(), h2.breakpoints.end(),
             std::back_inserter(h.breakpoints));
  h.breakpoints.erase(std::unique(h.breakpoints.begin(), h.breakpoints.end()), h.breakpoints.end());
  if (h1.analytic_coefficient && h2.analytic_coefficient) {
    h.analytic_coefficient = [alpha, beta, c1 = h1.analytic_coefficient, c2 = h2.analytic_coefficient](int k) {
      return alpha * c1(k) + beta * c2(k);
    };
    h.analytic_order = std::min(h1.analytic_order, h2.analytic_order);
  }
  return h;
}

SectionFunction by_name(std::string_view name, double T, double param) {
  if (name == "exp-neg") return exp_neg(T);
  if (name == "one-minus-t2") return power_profile(1.0);
  if (name == "power") return power_profile(param);
  if (name == "ball-section") return ball_section(static_cast<int>(param));
  if (name == "indicator") return indicator(T);
  throw DomainError("unknown test function '" + std::string(name) + "'");
}

}  // namespace section

std::string_view to_string(FracRoute route) {
  switch (route) {
    case FracRoute::General: return "general";
    case FracRoute::Even: return "even";
    case FracRoute::Negative: return "negative";
    case FracRoute::Classical: return "classical";
  }
  return "unknown";
}

// ---------------------------------------------------------------- Taylor coefficients

namespace {

// k-th derivative estimate at 0 with step s.
double central_even_difference(const SectionFunction& h, int k, double s) {
  // h even: h(-t) = h(t)
  switch (k) {
    case 0: return h(0.0);
    case 2: return 2.0 * (h(s) - h(0.0)) / (s * s);
    case 4: return (2.0 * h(2.0 * s) - 8.0 * h(s) + 6.0 * h(0.0)) / (s * s * s * s);
    default: return 0.0;
  }
}

double forward_difference(const SectionFunction& h, int k, double s) {
  double sum = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= k; ++i) {
    if (i > 0) binom *= static_cast<double>(k - i + 1) / i;
    sum += ((k - i) % 2 ? -1.0 : 1.0) * binom * h(i * s);
  }
  return sum / std::pow(s, k);
}

double richardson(const std::function<double(double)>& estimate, double step, int levels, double ratio) {
  std::vector<std::vector<double>> table(levels);
  for (int j = 0; j < levels; ++j) {
    table[j].resize(j + 1);
    table[j][0] = estimate(step / std::pow(2.0, j));
    double factor = 1.0;
    for (int l = 1; l <= j; ++l) {
      factor *= ratio;
      table[j][l] = (factor * table[j][l - 1] - table[j - 1][l - 1]) / (factor - 1.0);
    }
  }
  return table[levels - 1][levels - 1];
}

}  // namespace

std::vector<double> taylor_coeffs_at_zero(const SectionFunction& h, int m, const FracDerivOptions& options) {
  if (m < 0) throw DomainError("number of Taylor coefficients must be non-negative");
  if (m > h.max_smoothness + 1) {
    throw DomainError("requested " + std::to_string(m) + " Taylor coefficients but the function has only " +
                      std::to_string(h.max_smoothness) + " continuous derivatives");
  }
  std::vector<double> d(static_cast<std::size_t>(m), 0.0);
  if (m == 0) return d;
  if (h.has_analytic(m - 1)) {
    for (int k = 0; k < m; ++k) d[k] = (h.even && k % 2) ? 0.0 : h.analytic_coefficient(k) * factorial(k);
    return d;
  }
  if (m - 1 > 4) throw DomainError("finite differences are limited to derivatives of order 4");
  double step = options.fd_step_fraction * std::min(h.support_radius, 1.0);
  // the widest stencil reaches 2 * step (even) or (m - 1) * step (one-sided)
  if (!h.breakpoints.empty()) step = std::min(step, h.breakpoints.front() / (2.0 * std::max(2, m)));
  d[0] = h(0.0);
  for (int k = 1; k < m; ++k) {
    if (h.even) {
      if (k % 2) continue;
      d[k] = richardson([&](double s) { return central_even_difference(h, k, s); }, step, options.fd_levels, 4.0);
    } else {
      d[k] = richardson([&](double s) { return forward_difference(h, k, s); }, step, options.fd_levels, 2.0);
    }
  }
  return d;
}

double classical_deriv_at_zero(const SectionFunction& h, int k, const FracDerivOptions& options) {
  if (k < 0) throw DomainError("derivative order must be non-negative");
  if (k > h.max_smoothness) throw DomainError("derivative order exceeds the available smoothness");
  if (h.even && k % 2) return 0.0;
  const auto d = taylor_coeffs_at_zero(h, k + 1, options);
  return (k % 2 ? -1.0 : 1.0) * d[k];
}

int default_order_m(double q) {
  int m = static_cast<int>(std::floor(q)) + 1;
  if (m % 2) ++m;
  if (m <= q) m += 2;
  return std::max(m, 0);
}

// ---------------------------------------------------------------- regularized integrals

namespace {

struct Piece {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
  double split = 0.0;
  std::string model = "none";
  bool converged = true;

  void add(const IntegrationResult& r) {
    value += r.value;
    error += r.error;
    evaluations += r.evaluations;
    intervals += r.intervals;
    converged = converged && r.converged;
  }
};

AdaptiveOptions adaptive_options(const FracDerivOptions& options) {
  return AdaptiveOptions{options.abs_tol, options.rel_tol, options.max_intervals};
}

// ∫_a^b g, split at the breakpoints inside (a, b).
void integrate_pieces(const std::function<double(double)>& g, double a, double b, const std::vector<double>& breaks,
                      const FracDerivOptions& options, Piece& piece) {
  std::vector<double> edges{a};
  for (double x : breaks) {
    if (x > a && x < b) edges.push_back(x);
  }
  edges.push_back(b);
  auto local = adaptive_options(options);
  local.abs_tol /= static_cast<double>(edges.size() - 1);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) piece.add(integrate_adaptive(g, edges[i], edges[i + 1], local));
}

double horner(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

// Near-zero piece ∫_0^δ t^{-1-q} R(t) dt from the exact Taylor series.
bool near_series(const SectionFunction& h, int m, double q, double delta, Piece& piece) {
  double sum = 0.0;
  double last = 0.0;
  int small_terms = 0;
  for (int k = m; k <= h.analytic_order; ++k) {
    if (h.even && k % 2) continue;
    const double term = h.analytic_coefficient(k) * std::pow(delta, k - q) / (k - q);
    sum += term;
    last = std::abs(term);
    small_terms = last <= 1e-17 * std::max(std::abs(sum), 1e-300) ? small_terms + 1 : 0;
    if (small_terms >= 2) {
      piece.value += sum;
      piece.error += 4.0 * last + 1e-16 * std::abs(sum);
      piece.model = "series";
      return true;
    }
  }
  return false;
}

// Near-zero piece from a three-point model R(t) ≈ t^r (a0 + a1 x + a2 x^2),
// x = t^s, where r is the first order present in the remainder.
void near_fit(const std::function<double(double)>& remainder, bool even, int m, double q, double delta, Piece& piece) {
  const int s = even ? 2 : 1;
  const int r = even ? m + m % 2 : m;
  std::array<double, 3> t{delta, 0.5 * delta, 0.25 * delta};
  Eigen::Matrix3d V;
  Eigen::Vector3d y;
  for (int i = 0; i < 3; ++i) {
    const double x = std::pow(t[i], s);
    V(i, 0) = 1.0;
    V(i, 1) = x;
    V(i, 2) = x * x;
    y(i) = remainder(t[i]) / std::pow(t[i], r);
  }
  const Eigen::Vector3d a = V.partialPivLu().solve(y);
  double sum = 0.0;
  double last = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double p = r + j * s - q;
    last = a(j) * std::pow(delta, p) / p;
    sum += last;
  }
  piece.value += sum;
  piece.error += std::abs(last);
  piece.evaluations += 3;
  piece.model = "fit";
}

// ∫_0^b t^{-1-q} (h(t) - Σ_{k<m} c_k t^k) dt; the remainder starts at order m.
Piece integrate_regularized(const SectionFunction& h, const std::vector<double>& c, int m, double q, double b,
                            const FracDerivOptions& options) {
  Piece piece;
  if (m == 0) {
    // -1 < q < 0: substitute t = b0 v^{1/α}, α = -q, on [0, b0].
    const double alpha = -q;
    const double b0 = std::min(b, 1.0);
    const double scale = std::pow(b0, alpha) / alpha;
    std::vector<double> mapped;
    for (double x : h.breakpoints) mapped.push_back(std::pow(x / b0, alpha));
    integrate_pieces([&](double v) { return scale * h(b0 * std::pow(v, 1.0 / alpha)); }, 0.0, 1.0, mapped, options,
                     piece);
    if (b > b0) {
      integrate_pieces([&](double t) { return std::pow(t, -1.0 - q) * h(t); }, b0, b, h.breakpoints, options, piece);
    }
    piece.split = b0;
    return piece;
  }

  auto remainder = [&](double t) { return h(t) - horner(c, t); };
  double delta = 0.5 * std::min(b, 1.0);
  bool done = false;
  if (h.has_analytic(m + 8)) {
    for (int attempt = 0; attempt < 6 && !done; ++attempt, delta *= 0.5) {
      done = near_series(h, m, q, delta, piece);
      if (done) break;
    }
  }
  if (!done) {
    delta = 0.1 * std::min(b, 1.0);
    if (!h.breakpoints.empty()) delta = std::min(delta, 0.5 * h.breakpoints.front());
    near_fit(remainder, h.even, m, q, delta, piece);
  }
  piece.split = delta;
  integrate_pieces([&](double t) { return std::pow(t, -1.0 - q) * remainder(t); }, delta, b, h.breakpoints, options,
                   piece);
  return piece;
}

std::vector<double> coefficients_from_derivatives(const std::vector<double>& d) {
  std::vector<double> c(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) c[k] = d[k] / factorial(static_cast<int>(k));
  return c;
}

FracDerivResult finish(const Piece& piece, double bracket, double q, int m, FracRoute route) {
  FracDerivResult r;
  const double rg = q == std::round(q) ? 0.0 : reciprocal_gamma_negative(q);
  r.bracket = bracket;
  r.value = bracket * rg;
  r.q = q;
  r.m_used = m;
  r.route = route;
  r.diagnostics.evaluations = piece.evaluations;
  r.diagnostics.intervals = piece.intervals;
  r.diagnostics.split_point = piece.split;
  r.diagnostics.near_zero_model = piece.model;
  r.diagnostics.estimated_error = piece.error * std::abs(rg);
  r.diagnostics.bracket_error = piece.error;
  r.diagnostics.converged = piece.converged;
  return r;
}

void require_support(const SectionFunction& h) {
  if (!h.evaluate) throw DomainError("section function has no evaluator");
  if (!(h.support_radius > 0.0) || !std::isfinite(h.support_radius)) {
    throw DomainError("section function needs a finite positive support radius");
  }
}

}  // namespace

FracDerivResult frac_deriv_at_zero(const SectionFunction& h, const FractionalOrder& q, int m,
                                   const FracDerivOptions& options) {
  require_support(h);
  const double qv = q.value();
  if (m < 0 || !(qv < m)) throw DomainError("general form requires -1 < q < m");
  if (m > h.max_smoothness + 1) throw DomainError("m exceeds the available smoothness");
  if (qv == std::round(qv) && qv < m) throw DomainError("general form requires q not in {0, ..., m-1}");
  if (m == 0 && qv >= 0.0) throw DomainError("m = 0 requires q < 0");

  const auto c = coefficients_from_derivatives(taylor_coeffs_at_zero(h, m, options));
  const double T = h.support_radius;
  const double b = std::min(1.0, T);
  Piece piece = integrate_regularized(h, c, m, qv, b, options);
  double bracket = piece.value;
  if (T < 1.0) {
    for (int k = 0; k < m; ++k) bracket -= c[k] * (1.0 - std::pow(T, k - qv)) / (k - qv);
  } else if (T > 1.0) {
    Piece tail;
    integrate_pieces([&](double t) { return std::pow(t, -1.0 - qv) * h(t); }, 1.0, T, h.breakpoints, options, tail);
    bracket += tail.value;
    piece.error += tail.error;
    piece.evaluations += tail.evaluations;
    piece.intervals += tail.intervals;
    piece.converged = piece.converged && tail.converged;
  }
  for (int k = 0; k < m; ++k) bracket += c[k] / (k - qv);
  return finish(piece, bracket, qv, m, FracRoute::General);
}

FracDerivResult frac_deriv_even(const SectionFunction& h, const FractionalOrder& q, int m,
                                const FracDerivOptions& options) {
  require_support(h);
  const double qv = q.value();
  if (m < 0 || m % 2) throw DomainError("even form requires an even m");
  if (!(qv > m - 2 && qv < m)) throw DomainError("even form requires m - 2 < q < m");
  if (m >= 2 && !h.even) throw DomainError("even form with m >= 2 requires an even function");

  std::vector<double> c = coefficients_from_derivatives(taylor_coeffs_at_zero(h, std::max(m - 1, 0), options));
  c.resize(static_cast<std::size_t>(m), 0.0);
  const double T = h.support_radius;
  Piece piece = integrate_regularized(h, c, m, qv, T, options);
  double bracket = piece.value;
  // -∫_T^∞ t^{-q-1} P(t) dt in closed form (every exponent 2j - q is negative).
  for (int k = 0; k + 2 <= m; k += 2) bracket += c[k] * std::pow(T, k - qv) / (k - qv);
  return finish(piece, bracket, qv, m, FracRoute::Even);
}

FracDerivResult frac_deriv_neg(const SectionFunction& h, const FractionalOrder& q, const FracDerivOptions& options) {
  require_support(h);
  const double qv = q.value();
  if (!(qv > -1.0 && qv < 0.0)) throw DomainError("negative form requires -1 < q < 0");
  const Piece piece = integrate_regularized(h, {}, 0, qv, h.support_radius, options);
  return finish(piece, piece.value, qv, 0, FracRoute::Negative);
}

FracDerivResult frac_deriv(const SectionFunction& h, const FractionalOrder& q, const FracDerivOptions& options) {
  const double qv = q.value();
  if (qv == std::round(qv)) {
    const int k = static_cast<int>(qv);
    FracDerivResult r;
    r.value = classical_deriv_at_zero(h, k, options);
    r.bracket = kNaN;
    r.q = qv;
    r.m_used = k;
    r.route = FracRoute::Classical;
    r.diagnostics.near_zero_model = "none";
    return r;
  }
  if (qv < 0.0) return frac_deriv_neg(h, q, options);
  const int m = default_order_m(qv);
  if (h.even) return frac_deriv_even(h, q, m, options);
  return frac_deriv_at_zero(h, q, m, options);
}

NormalizedDerivative normalized_frac_deriv(const SectionFunction& h, const FractionalOrder& q,
                                           const FracDerivOptions& options) {
  const double qv = q.value();
  NormalizedDerivative out;
  if (q.is_limit_order() && q.near_odd_integer()) {
    if (!h.even) throw DomainError("the normalized derivative at odd orders requires an even function");
    const int m = default_order_m(qv);
    out.detail = frac_deriv_even(h, q, m, options);
    out.raw = out.detail.value;
  } else {
    out.detail = frac_deriv(h, q, options);
    out.raw = out.detail.value;
  }
  if (out.detail.route == FracRoute::Classical) {
    const double cosine = cos_pi(0.5 * qv);
    if (cosine == 0.0) throw DomainError("classical odd-order derivative has no normalized value");
    out.normalized = out.raw / cosine;
    return out;
  }
  // 1/(Γ(-q) cos(πq/2)) = -(2/π) sin(πq/2) Γ(1+q)
  const double factor = -(2.0 / kPi) * sin_pi(0.5 * qv) * std::exp(log_gamma(1.0 + qv));
  out.normalized = out.detail.bracket * factor;
  out.detail.diagnostics.estimated_error = out.detail.diagnostics.bracket_error * std::abs(factor);
  return out;
}

}  // namespace radonfd
