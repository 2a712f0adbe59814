#include "doctest.h"

#include <cmath>

#include "radonfd/errors.hpp"
#include "radonfd/fracderiv.hpp"
#include "radonfd/special.hpp"
#include "test_support.hpp"

using namespace radonfd;

namespace {

SectionFunction one_minus_t2() { return section::power_profile(1.0); }
SectionFunction three_halves() { return section::power_profile(1.5); }

}  // namespace

TEST_CASE("taylor coefficients from the oracle and from finite differences") {
  const auto d = taylor_coeffs_at_zero(one_minus_t2(), 4);
  CHECK(d[0] == doctest::Approx(1.0));
  CHECK(d[1] == 0.0);
  CHECK(d[2] == doctest::Approx(-2.0));
  CHECK(d[3] == 0.0);

  const auto e = taylor_coeffs_at_zero(section::exp_neg(40.0), 5);
  for (int k = 0; k < 5; ++k) CHECK(e[k] == doctest::Approx(k % 2 ? -1.0 : 1.0).epsilon(1e-14));

  for (double a : {1.0, 1.5, 2.5}) {
    const auto h = section::power_profile(a, kPi);
    const auto analytic = taylor_coeffs_at_zero(h, 5);
    const auto numeric = taylor_coeffs_at_zero(section::without_oracle(h), 5);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(numeric[k] - analytic[k]) <= 1e-9 * std::max(1.0, std::abs(analytic[k])));
    CHECK(numeric[1] == 0.0);
    CHECK(numeric[3] == 0.0);
  }

  auto rough = section::without_oracle(section::exp_neg(40.0));
  CHECK_THROWS_AS(taylor_coeffs_at_zero(rough, 7), DomainError);
}

TEST_CASE("classical derivatives") {
  CHECK(classical_deriv_at_zero(one_minus_t2(), 2) == doctest::Approx(-2.0));
  CHECK(classical_deriv_at_zero(section::exp_neg(40.0), 3) == doctest::Approx(1.0));
  CHECK(classical_deriv_at_zero(three_halves(), 1) == 0.0);
  CHECK(classical_deriv_at_zero(three_halves(), 3) == 0.0);
}

TEST_CASE("exponential eigen-test on every route") {
  const auto h = section::exp_neg(40.0);
  for (double q : {-0.5, -0.1, 0.3, 0.5, 1.2, 2.4, 3.6, 4.7}) {
    CAPTURE(q);
    const FractionalOrder order(q);
    if (q < 0.0) {
      CHECK(std::abs(frac_deriv_neg(h, order).value - 1.0) <= 1e-8);
      CHECK(std::abs(frac_deriv_even(h, order, 0).value - 1.0) <= 1e-8);
      CHECK(std::abs(frac_deriv_at_zero(h, order, 1).value - 1.0) <= 1e-8);
    } else {
      const int lowest = static_cast<int>(std::floor(q)) + 1;
      for (int m = lowest; m <= lowest + 2; ++m) {
        CAPTURE(m);
        CHECK(std::abs(frac_deriv_at_zero(h, order, m).value - 1.0) <= 1e-8);
      }
    }
    CHECK(std::abs(frac_deriv(h, order).value - 1.0) <= 1e-8);
  }
  // the exact example cells
  CHECK(std::abs(frac_deriv_at_zero(h, FractionalOrder(0.5), 1).value - 1.0) <= 1e-8);
  CHECK(std::abs(frac_deriv_at_zero(h, FractionalOrder(2.4), 3).value - 1.0) <= 1e-8);
}

TEST_CASE("m-independence and agreement of the general and even forms") {
  for (const auto& h : {one_minus_t2(), three_halves()}) {
    for (double q : {-0.3, 0.5, 1.2, 1.5, 2.5, 3.3}) {
      CAPTURE(q);
      const FractionalOrder order(q);
      const int lowest = std::max(0, static_cast<int>(std::floor(q)) + 1);
      const double reference = frac_deriv_at_zero(h, order, std::max(lowest, 1)).value;
      for (int m = std::max(lowest, 1) + 1; m <= lowest + 3; ++m) {
        CAPTURE(m);
        CHECK(test::rel_err(frac_deriv_at_zero(h, order, m).value, reference) <= 1e-8);
      }
      const int m_even = default_order_m(q);
      CHECK(test::rel_err(frac_deriv_even(h, order, m_even).value, reference) <= 1e-8);
    }
  }
  const auto h = one_minus_t2();
  CHECK(test::rel_err(frac_deriv_even(h, FractionalOrder(0.5), 2).value,
                      frac_deriv_at_zero(h, FractionalOrder(0.5), 1).value) <= 1e-9);
  CHECK(std::abs(frac_deriv_neg(h, FractionalOrder(-0.3)).value -
                 frac_deriv_at_zero(h, FractionalOrder(-0.3), 1).value) <= 1e-10);
}

TEST_CASE("indicator of [0,1]") {
  const auto h = section::indicator(1.0);
  // (1/Γ(0.5)) ∫_0^1 t^{-0.5} dt = 2/√π
  CHECK(test::rel_err(frac_deriv_neg(h, FractionalOrder(-0.5)).value, 2.0 / std::sqrt(kPi)) <= 1e-12);
  // q = 0.5: only the Taylor tail survives, -(1/Γ(-0.5)) / 0.5 = 1/√π
  const double general = frac_deriv_at_zero(h, FractionalOrder(0.5), 1).value;
  const double even = frac_deriv_even(h, FractionalOrder(0.5), 2).value;
  CHECK(test::rel_err(general, 1.0 / std::sqrt(kPi)) <= 1e-12);
  CHECK(test::rel_err(even, general) <= 1e-12);
}

TEST_CASE("ball sections reproduce the closed form") {
  struct Cell { int n; double q; int m; };
  for (auto c : {Cell{4, 1.5, 2}, Cell{4, 0.5, 2}, Cell{4, 2.5, 4}, Cell{5, 1.5, 2}, Cell{3, 0.5, 2}}) {
    CAPTURE(c.n);
    CAPTURE(c.q);
    const auto h = section::ball_section(c.n);
    const FractionalOrder order(c.q);
    const double expected = ball_frac_deriv_closed_form(c.n, order);
    CHECK(test::rel_err(frac_deriv_at_zero(h, order, c.m).value, expected) <= 1e-10);
    CHECK(test::rel_err(frac_deriv(h, order).value, expected) <= 1e-10);
    CHECK(test::rel_err(frac_deriv(section::without_oracle(h), order).value, expected) <= 1e-7);
  }
}

TEST_CASE("integer-limit continuity at q = 2") {
  for (const auto& h : {one_minus_t2(), three_halves(), section::ball_section(5)}) {
    const double classical = classical_deriv_at_zero(h, 2);
    for (double q : {2.0 - 1e-4, 2.0 + 1e-4}) {
      CHECK(test::rel_err(frac_deriv(h, FractionalOrder(q)).value, classical) <= 1e-3);
    }
    CHECK(frac_deriv(h, FractionalOrder(2.0)).route == FracRoute::Classical);
  }
}

TEST_CASE("linearity") {
  const auto h1 = three_halves();
  const auto h2 = section::power_profile(2.5);
  const double alpha = 0.7;
  const double beta = -1.9;
  const auto combo = section::linear_combination(alpha, h1, beta, h2);
  for (double q : {-0.4, 0.5, 1.7, 2.2}) {
    const FractionalOrder order(q);
    const double lhs = frac_deriv(combo, order).value;
    const double rhs = alpha * frac_deriv(h1, order).value + beta * frac_deriv(h2, order).value;
    CHECK(test::rel_err(lhs, rhs) <= 1e-10);
  }
}

TEST_CASE("normalized derivative is continuous through odd orders") {
  const auto h = section::ball_section(4);
  const double at_one = normalized_frac_deriv(h, FractionalOrder::continuous_limit(1.0)).normalized;
  const double below = normalized_frac_deriv(h, FractionalOrder(1.0 - 1e-3)).normalized;
  const double above = normalized_frac_deriv(h, FractionalOrder(1.0 + 1e-3)).normalized;
  CHECK(std::isfinite(at_one));
  CHECK(test::rel_err(below, at_one) <= 1e-2);
  CHECK(test::rel_err(above, at_one) <= 1e-2);
  CHECK(test::rel_err(0.5 * (below + above), at_one) <= 1e-5);

  const auto normalized = normalized_frac_deriv(h, FractionalOrder(0.5));
  CHECK(test::rel_err(normalized.normalized * cos_pi(0.25), normalized.raw) <= 1e-12);
  CHECK(test::rel_err(normalized_frac_deriv(h, FractionalOrder(2.0)).normalized, -classical_deriv_at_zero(h, 2)) <= 1e-12);
}

TEST_CASE("domain errors") {
  const auto h = one_minus_t2();
  CHECK_THROWS_AS(frac_deriv_at_zero(h, FractionalOrder(1.5), 1), DomainError);
  CHECK_THROWS_AS(frac_deriv_even(h, FractionalOrder(1.5), 3), DomainError);
  CHECK_THROWS_AS(frac_deriv_even(h, FractionalOrder(2.5), 2), DomainError);
  CHECK_THROWS_AS(frac_deriv_neg(h, FractionalOrder(0.5)), DomainError);
  CHECK_THROWS_AS(frac_deriv_even(section::exp_neg(40.0), FractionalOrder(0.5), 2), DomainError);
  CHECK_THROWS_AS(normalized_frac_deriv(section::exp_neg(40.0), FractionalOrder::continuous_limit(1.0)), DomainError);
}

TEST_CASE("diagnostics are recorded") {
  const auto r = frac_deriv(three_halves(), FractionalOrder(1.5));
  CHECK(r.m_used == 2);
  CHECK(r.route == FracRoute::Even);
  CHECK(r.diagnostics.evaluations > 0);
  CHECK(r.diagnostics.split_point > 0.0);
  CHECK(r.diagnostics.near_zero_model == "series");
  CHECK(r.diagnostics.converged);
  const auto f = frac_deriv(section::without_oracle(three_halves()), FractionalOrder(1.5));
  CHECK(f.diagnostics.near_zero_model == "fit");
}
