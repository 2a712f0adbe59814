#include "radonfd/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "radonfd/errors.hpp"

namespace radonfd {

namespace {

constexpr double kEulerGamma = 0.57721566490153287;
constexpr double kLogPi = 1.1447298858494002;
constexpr double kLogTwo = 0.69314718055994531;
constexpr double kHalfLogTwoPi = 0.91893853320467274;

// zeta(k) - 1 for k = 2, 3, ...
constexpr std::array<double, 40> kZetaMinusOne{
    0.64493406684822641,    0.20205690315959429,    0.082323233711138186,
    0.036927755143369927,   0.01734306198444914,    0.0083492773819228271,
    0.0040773561979443396,  0.0020083928260822143,  0.00099457512781808526,
    0.00049418860411946453, 0.00024608655330804832, 0.00012271334757848915,
    6.1248135058704828e-05, 3.0588236307020493e-05, 1.5282259408651871e-05,
    7.6371976378997626e-06, 3.8172932649998402e-06, 1.908212716553939e-06,
    9.5396203387279621e-07, 4.7693298678780645e-07, 2.38450502727733e-07,
    1.1921992596531106e-07, 5.960818905125948e-08,  2.9803503514652279e-08,
    1.4901554828365043e-08, 7.4507117898354301e-09, 3.7253340247884573e-09,
    1.8626597235130491e-09, 9.3132743241966817e-10, 4.6566290650337837e-10,
    2.3283118336765053e-10, 1.1641550172700519e-10, 5.8207720879027015e-11,
    2.9103850444971e-11,    1.4551921891041985e-11, 7.2759598350574818e-12,
    3.6379795473786509e-12, 1.8189896503070661e-12, 9.0949478402638884e-13,
    4.5474737830421542e-13,
};

// B_{2k} / (2k (2k-1)) for k = 1..8 (Stirling series).
constexpr std::array<double, 8> kStirling{
    1.0 / 12.0,         -1.0 / 360.0,           1.0 / 1260.0,
    -1.0 / 1680.0,      1.0 / 1188.0,           -691.0 / 360360.0,
    1.0 / 156.0,        -3617.0 / 122400.0,
};

// ln Γ(2 + z) for |z| <= 1/2, from the Taylor series of ln Γ(1 + z) with the
// -ln(1+z) part cancelled analytically.
double log_gamma_two_plus(double z) {
  double sum = 0.0;
  double power = z;  // z^k
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    power *= z;
    const int k = static_cast<int>(i) + 2;
    const double term = kZetaMinusOne[i] * power / k;
    sum += (k % 2 == 0) ? term : -term;
  }
  return z * (1.0 - kEulerGamma) + sum;
}

double log_gamma_stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + series;
}

void require_dimension(int n, int min_n = 1) {
  if (n < min_n) throw DomainError("dimension must be >= " + std::to_string(min_n));
}

}  // namespace

FractionalOrder::FractionalOrder(double q, double guard_radius)
    : FractionalOrder(q, guard_radius, false) {}

FractionalOrder::FractionalOrder(double q, double guard_radius, bool limit)
    : q_(q), guard_(guard_radius), limit_(limit) {
  if (!std::isfinite(q) || q <= -1.0) throw DomainError("fractional order must satisfy q > -1");
  if (!(guard_radius > 0.0)) throw DomainError("guard radius must be positive");
  if (!limit && near_odd_integer()) {
    throw DomainError("fractional order " + std::to_string(q) +
                      " lies in the guard band of an odd integer");
  }
}

FractionalOrder FractionalOrder::continuous_limit(double q, double guard_radius) {
  return FractionalOrder(q, guard_radius, true);
}

bool FractionalOrder::near_odd_integer() const noexcept {
  if (q_ < 1.0 - guard_) return false;
  const double k = std::round((q_ - 1.0) / 2.0);
  return std::abs(q_ - (2.0 * k + 1.0)) <= guard_;
}

int FractionalOrder::near_integer(double tol) const noexcept {
  const double k = std::round(q_);
  if (k < 0.0 || std::abs(q_ - k) > tol) return -1;
  return static_cast<int>(k);
}

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double r = x - 2.0 * std::round(x / 2.0);  // [-1, 1]
  double sign = 1.0;
  if (r < 0.0) {
    r = -r;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  const double r = std::abs(x - 2.0 * std::round(x / 2.0));  // [0, 1]
  if (r < 0.25) return std::cos(kPi * r);
  if (r <= 0.75) return std::sin(kPi * (0.5 - r));
  return -std::cos(kPi * (1.0 - r));
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires a finite positive argument");
  }
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x < 1.5) return log_gamma_two_plus(x - 1.0) - std::log(x);
  if (x <= 2.5) return log_gamma_two_plus(x - 2.0);
  if (x < 8.0) {
    double product = 1.0;
    while (x > 2.5) {
      x -= 1.0;
      product *= x;
    }
    return std::log(product) + log_gamma_two_plus(x - 2.0);
  }
  return log_gamma_stirling(x);
}

double reciprocal_gamma_negative(double q) {
  if (!std::isfinite(q) || q <= -1.0) throw DomainError("reciprocal_gamma_negative requires q > -1");
  if (q == std::round(q)) throw PoleError("Γ(-q) has a pole at non-negative integer q");
  // Γ(-q) Γ(1+q) = -π / sin(πq)
  return -sin_pi(q) * std::exp(log_gamma(1.0 + q)) / kPi;
}

double fourier_power_constant(double lambda, int n) {
  require_dimension(n);
  if (!(lambda > -n && lambda < 0.0)) {
    throw DomainError("fourier_power_constant requires -n < lambda < 0");
  }
  return std::exp((lambda + n) * kLogTwo + 0.5 * n * kLogPi + log_gamma(0.5 * (lambda + n)) -
                  log_gamma(-0.5 * lambda));
}

double log_ball_volume(int n) {
  require_dimension(n);
  return 0.5 * n * kLogPi - log_gamma(0.5 * n + 1.0);
}

double ball_volume(int n) { return std::exp(log_ball_volume(n)); }

double sphere_surface(int n) {
  require_dimension(n);
  return std::exp(kLogTwo + 0.5 * n * kLogPi - log_gamma(0.5 * n));
}

namespace {

void require_order_range(int n, const FractionalOrder& q, double lower, const char* what) {
  require_dimension(n, 2);
  const double v = q.value();
  if (!(v >= lower && v < n - 1.0)) throw DomainError(std::string(what) + ": order out of range");
}

}  // namespace

double ball_frac_deriv_closed_form(int n, const FractionalOrder& q) {
  require_order_range(n, q, -1.0, "ball_frac_deriv_closed_form");
  const double v = q.value();
  const double log_mag = (v + 1.0) * kLogTwo + 0.5 * (n - 2) * kLogPi + log_gamma(0.5 * (v + 1.0)) -
                         std::log(n - v - 1.0) - log_gamma(0.5 * (n - v - 1.0));
  return cos_pi(0.5 * v) * std::exp(log_mag);
}

double volume1_ball_value(int n, const FractionalOrder& q) {
  require_order_range(n, q, 0.0, "volume1_ball_value");
  const double v = q.value();
  const double k = n - v - 1.0;
  return std::exp(v * kLogTwo + 0.5 * (n - 2) * kLogPi + log_gamma(0.5 * (v + 1.0)) +
                  (k / n) * log_gamma(1.0 + 0.5 * n) - log_gamma(0.5 * k + 1.0) -
                  0.5 * k * kLogPi);
}

double theorem2_constant(int n, const FractionalOrder& q) {
  require_order_range(n, q, -1.0, "theorem2_constant");
  const double v = q.value();
  return std::exp(std::log(static_cast<double>(n)) - std::log(n - v - 1.0) - v * kLogTwo -
                  0.5 * (v - 1.0) * kLogPi - log_gamma(0.5 * (v + 1.0)));
}

double theorem2_exact_constant(int n, const FractionalOrder& q) {
  require_order_range(n, q, -1.0, "theorem2_exact_constant");
  const double v = q.value();
  const double k = n - v - 1.0;
  // The log-convexity factor Γ(k/2+1) / Γ(n/2+1)^{k/n} is <= 1.
  const double log_convexity = log_gamma(0.5 * k + 1.0) - (k / n) * log_gamma(0.5 * n + 1.0);
  return theorem2_constant(n, q) * std::exp(log_convexity);
}

double kpz_dovr_bound(int n, double q, double C) {
  require_dimension(n, 2);
  if (!(q >= 1.0 && q <= n - 1.0)) throw DomainError("kpz_dovr_bound requires 1 <= q <= n-1");
  if (!(C > 0.0)) throw DomainError("kpz_dovr_bound requires C > 0");
  const double l = std::log(n * std::exp(1.0) / q);
  return C * std::sqrt(n * l * l * l / q);
}

double theorem1_lower_bound(int n, const FractionalOrder& q, double c) {
  require_dimension(n, 2);
  const double v = q.value();
  if (!(v >= 0.0 && v <= n - 2.0)) throw DomainError("theorem1_lower_bound requires 0 <= q <= n-2");
  if (!(c > 0.0)) throw DomainError("theorem1_lower_bound requires c > 0");
  const double l = std::log(n * std::exp(1.0) / (v + 1.0));
  const double base = c * (v + 1.0) / std::sqrt(n * l * l * l);
  return std::pow(base, v + 1.0);
}

}  // namespace radonfd
