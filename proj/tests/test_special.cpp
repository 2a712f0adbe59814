#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "radonfd/errors.hpp"
#include "radonfd/special.hpp"
#include "test_support.hpp"

using namespace radonfd;
using radonfd::test::rel_err;

TEST_CASE("log_gamma matches the high-precision table") {
  double worst = 0.0;
  for (const auto& [x, want] : oracle::kLogGamma) worst = std::max(worst, rel_err(log_gamma(x), want));
  CHECK(worst <= 1e-13);
  CHECK(rel_err(log_gamma(3.7), oracle::kLogGamma3p7) <= 1e-13);
}

TEST_CASE("log_gamma at exact points") {
  CHECK(rel_err(log_gamma(0.5), 0.5 * std::log(kPi)) <= 1e-14);
  CHECK(rel_err(log_gamma(5.0), std::log(24.0)) <= 1e-14);
  CHECK(std::abs(log_gamma(1.0)) <= 1e-16);
  CHECK(std::abs(log_gamma(2.0)) <= 1e-16);
}

TEST_CASE("log_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
}

TEST_CASE("reflection identity holds on (0,1)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(1e-3, 1.0 - 1e-3);
  for (int i = 0; i < 500; ++i) {
    const double x = unit(rng);
    const double lhs = std::exp(log_gamma(x) + log_gamma(1.0 - x));
    CHECK(rel_err(lhs, kPi / std::sin(kPi * x)) <= 1e-12);
  }
}

TEST_CASE("reciprocal_gamma_negative") {
  CHECK(rel_err(reciprocal_gamma_negative(-0.5), 1.0 / std::sqrt(kPi)) <= 1e-14);
  CHECK(rel_err(reciprocal_gamma_negative(0.5), -1.0 / (2.0 * std::sqrt(kPi))) <= 1e-14);
  CHECK(rel_err(reciprocal_gamma_negative(2.3), oracle::kRecipGammaNeg2p3) <= 1e-13);
  CHECK(rel_err(reciprocal_gamma_negative(0.3), oracle::kRecipGammaNeg0p3) <= 1e-13);
  CHECK_THROWS_AS(reciprocal_gamma_negative(0.0), PoleError);
  CHECK_THROWS_AS(reciprocal_gamma_negative(3.0), PoleError);
  CHECK_THROWS_AS(reciprocal_gamma_negative(-1.0), DomainError);
}

TEST_CASE("sin_pi and cos_pi have exact zeros") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(cos_pi(0.5) == 0.0);
  CHECK(cos_pi(2.5) == 0.0);
  CHECK(cos_pi(1.0) == -1.0);
  CHECK(rel_err(sin_pi(0.25), std::sqrt(0.5)) <= 1e-15);
  CHECK(rel_err(cos_pi(-0.75), -std::sqrt(0.5)) <= 1e-15);
}

TEST_CASE("fourier_power_constant") {
  CHECK(rel_err(fourier_power_constant(-2.0, 3), 2.0 * kPi * kPi) <= 1e-14);
  CHECK(rel_err(fourier_power_constant(-1.0, 2), 2.0 * kPi) <= 1e-14);
  CHECK(rel_err(fourier_power_constant(-1.3, 3), oracle::kFourierConst_n3_lm1p3) <= 1e-13);
  for (int n = 1; n <= 12; ++n) {
    for (double frac : {0.01, 0.3, 0.5, 0.77, 0.99}) CHECK(fourier_power_constant(-frac * n, n) > 0.0);
  }
  CHECK_THROWS_AS(fourier_power_constant(0.0, 3), DomainError);
  CHECK_THROWS_AS(fourier_power_constant(-3.0, 3), DomainError);
}

TEST_CASE("ball and sphere measures") {
  CHECK(rel_err(sphere_surface(3), 4.0 * kPi) <= 1e-15);
  CHECK(rel_err(ball_volume(3), 4.0 * kPi / 3.0) <= 1e-15);
  CHECK(rel_err(sphere_surface(2), 2.0 * kPi) <= 1e-15);
  CHECK(rel_err(ball_volume(2), kPi) <= 1e-15);
  for (int n = 1; n <= 20; ++n) CHECK(rel_err(n * ball_volume(n), sphere_surface(n)) <= 1e-13);
  // all constants survive high dimension in log space
  CHECK(std::isfinite(ball_volume(50)));
  CHECK(ball_volume(50) > 0.0);
}

TEST_CASE("ball closed form against the high-precision table") {
  for (const auto& [n, q, want] : oracle::kBallDerivative) {
    CHECK(rel_err(ball_frac_deriv_closed_form(static_cast<int>(n), FractionalOrder(q)), want) <= 1e-13);
  }
  for (const auto& [n, q, want] : oracle::kVolumeOneBall) {
    const auto order = FractionalOrder::continuous_limit(q);
    CHECK(rel_err(volume1_ball_value(static_cast<int>(n), order), want) <= 1e-13);
  }
}

TEST_CASE("zeroth derivative of the ball is the central section") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(rel_err(ball_frac_deriv_closed_form(n, FractionalOrder(0.0)), ball_volume(n - 1)) <= 1e-13);
  }
  CHECK(rel_err(ball_frac_deriv_closed_form(3, FractionalOrder(0.0)), kPi) <= 1e-14);
}

TEST_CASE("volume-one ball chain") {
  CHECK(volume1_ball_value(3, FractionalOrder(0.0)) == doctest::Approx(1.2090).epsilon(1e-4));
  CHECK(rel_err(volume1_ball_value(3, FractionalOrder(0.0)),
                kPi / std::pow(4.0 * kPi / 3.0, 2.0 / 3.0)) <= 1e-14);
  for (int n = 3; n <= 12; ++n) {
    for (double q : {0.0, 0.25, 0.5, 1.5, 2.0, 2.5, 4.2}) {
      if (q >= n - 1) continue;
      const FractionalOrder order(q);
      const double chain = volume1_ball_value(n, order) * cos_pi(q / 2) *
                           std::pow(ball_volume(n), (n - q - 1.0) / n);
      CHECK(rel_err(chain, ball_frac_deriv_closed_form(n, order)) <= 1e-12);
    }
  }
}

TEST_CASE("slicing constants") {
  CHECK(rel_err(theorem2_constant(3, FractionalOrder(0.0)), 1.5) <= 1e-14);
  for (int n = 2; n <= 10; ++n) CHECK(rel_err(theorem2_constant(n, FractionalOrder(0.0)), n / (n - 1.0)) <= 1e-14);

  // The unsimplified product form of c(n,q), written out independently.
  auto product_form = [](int n, double q) {
    const double k = n - q - 1.0;
    return kPi * std::tgamma(k / 2) * std::pow(n, (q + 1) / n) * std::pow(2.0, k / n) * std::pow(kPi, k / 2) /
           (std::pow(2.0, q + 1) * std::pow(kPi, n / 2.0) * std::tgamma((q + 1) / 2) *
            std::pow(std::tgamma(n / 2.0), k / n));
  };
  for (int n = 2; n <= 14; ++n) {
    for (double q = -0.9; q < n - 1; q += 0.35) {
      if (FractionalOrder::continuous_limit(q).near_odd_integer()) continue;
      const FractionalOrder order(q);
      const double exact = theorem2_exact_constant(n, order);
      CHECK(exact <= theorem2_constant(n, order) * (1.0 + 1e-14));
      CHECK(rel_err(exact, product_form(n, q)) <= 1e-11);
    }
  }
}

TEST_CASE("KPZ distance bound") {
  CHECK(rel_err(kpz_dovr_bound(4, 3.0, 1.0), oracle::kKpz_n4_q3) <= 1e-14);
  CHECK(rel_err(kpz_dovr_bound(9, 1.0, 1.0), oracle::kKpz_n9_q1) <= 1e-14);
  CHECK(rel_err(kpz_dovr_bound(7, 2.5, 2.0), 2.0 * kpz_dovr_bound(7, 2.5, 1.0)) <= 1e-15);
  CHECK_THROWS_AS(kpz_dovr_bound(4, 0.5, 1.0), DomainError);
  CHECK_THROWS_AS(kpz_dovr_bound(4, 3.5, 1.0), DomainError);
}

TEST_CASE("thm1 lower bound formula") {
  const double l = std::log(3.0 * std::exp(1.0));
  CHECK(rel_err(theorem1_lower_bound(3, FractionalOrder(0.0), 1.0), 1.0 / std::sqrt(3.0 * l * l * l)) <= 1e-14);
  CHECK(rel_err(theorem1_lower_bound(4, FractionalOrder(1.5), 0.1), oracle::kTheorem1Bound_n4_q1p5_c0p1) <= 1e-13);
  double previous = 0.0;
  for (double c = 0.01; c < 3.0; c += 0.1) {
    const double v = theorem1_lower_bound(5, FractionalOrder(2.5), c);
    CHECK(v > previous);
    previous = v;
  }
  CHECK_THROWS_AS(theorem1_lower_bound(4, FractionalOrder(2.5), 1.0), DomainError);
}

TEST_CASE("FractionalOrder guard band") {
  CHECK_THROWS_AS(FractionalOrder(1.0), DomainError);
  CHECK_THROWS_AS(FractionalOrder(3.0 + 5e-7), DomainError);
  CHECK_NOTHROW(FractionalOrder(3.0 + 2e-6));
  CHECK_NOTHROW(FractionalOrder(2.0));
  CHECK_THROWS_AS(FractionalOrder(-1.0), DomainError);
  CHECK(FractionalOrder::continuous_limit(1.0).near_odd_integer());
  CHECK(FractionalOrder(2.0001).near_integer(1e-3) == 2);
  CHECK(FractionalOrder(0.5).near_integer(1e-3) == -1);
}
