#include "doctest.h"

#include <cmath>
#include <numbers>

#include "radonfd/errors.hpp"
#include "radonfd/verify.hpp"
#include "test_support.hpp"

using namespace radonfd;
using radonfd::test::rel_err;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

QuadratureSpec light() {
  QuadratureSpec quad;
  quad.direction_grid = 100;
  quad.volume_grid = 4000;
  quad.refine_rounds = 1;
  return quad;
}

double diag(const InequalityReport& r, std::string_view key) {
  const auto v = r.diagnostic_value(key);
  REQUIRE(v.has_value());
  return *v;
}

}  // namespace

TEST_CASE("corollary1 routes agree") {
  const auto r = check_corollary1(3, FractionalOrder(0.0));
  CHECK(r.pass);
  CHECK(rel_err(r.lhs, std::numbers::pi) < 1e-14);
  CHECK(rel_err(diag(r, "fourier_route"), std::numbers::pi) < 1e-13);
  CHECK(rel_err(diag(r, "one_dimensional"), std::numbers::pi) < 1e-8);
  CHECK(rel_err(diag(r, "pipeline"), std::numbers::pi) < 1e-6);

  for (auto [n, q] : {std::pair{4, 0.5}, std::pair{5, 2.5}}) {
    const auto rep = check_corollary1(n, FractionalOrder(q));
    CAPTURE(n);
    CHECK(rep.pass);
    CHECK(diag(rep, "gap_fourier") < 1e-12);
    CHECK(rep.relative_gap < 1e-6);
    CHECK(rep.constants.size() >= 3);
  }
  CHECK_THROWS_AS(check_corollary1(3, FractionalOrder(2.0)), DomainError);
  CHECK_THROWS_AS(check_corollary1(3, FractionalOrder::continuous_limit(1.0)), DomainError);
}

TEST_CASE("spherical Parseval") {
  const auto grid = SphereGrid::make(3, 4000);
  const auto ball = check_parseval(StarBody::ball(3), 1.5, grid, 1e-12);
  CHECK(ball.pass);
  CHECK(ball.relative_gap <= 1e-12);
  CHECK(rel_err(ball.rhs, std::pow(2.0 * kPi, 3) * sphere_surface(3)) < 1e-12);

  const auto E = StarBody::ellipsoid(vec({2, 1, 1}));
  for (double p : {1.0, 1.5}) {
    const auto r = check_parseval(E, p, grid, 1e-3);
    CAPTURE(p);
    CHECK(r.pass);
    const auto swapped = check_parseval(E, 3.0 - p, grid, 1e-3);
    CHECK(rel_err(swapped.lhs, r.lhs) < 1e-12);
    CHECK(rel_err(swapped.rhs, r.rhs) < 1e-12);
  }
  CHECK_THROWS_AS(check_parseval(StarBody::cube(3), 1.5, grid, 1e-3), DomainError);
  CHECK_THROWS_AS(check_parseval(E, 3.0, grid, 1e-3), DomainError);
}

TEST_CASE("moment identity") {
  const auto quad = light();
  const auto r = check_mp_moment_identity(StarBody::ball(3), FractionalOrder(0.5), quad);
  CHECK(r.pass);
  CHECK(rel_err(r.rhs, 8.0 * kPi / 3.0) < 1e-14);
  CHECK(rel_err(r.lhs, 8.0 * kPi / 3.0) < 1e-12);

  const auto l1 = check_mp_moment_identity(StarBody::lp_ball(2, 1.0), FractionalOrder::continuous_limit(0.3), quad);
  CHECK(l1.pass);
  CHECK(l1.relative_gap <= 1e-3);
  CHECK_THROWS_AS(check_mp_moment_identity(StarBody::ball(3), FractionalOrder(2.5)), DomainError);
}

TEST_CASE("moment lemma") {
  const auto quad = light();
  const auto B = StarBody::ball(3);
  const auto same = check_mp_lemma(B, Density::uniform(), B, FractionalOrder(0.5), quad);
  CHECK(same.pass);
  CHECK(same.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(same.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(same.tight);

  // A homothetic L with g ≡ 1 is an equality case of the lemma: both sides are 1/2.
  const auto half = check_mp_lemma(StarBody::ball(3, 0.5), Density::uniform(), B, FractionalOrder(0.5), quad);
  CHECK(half.pass);
  CHECK(half.lhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half.rhs == doctest::Approx(0.5).epsilon(1e-12));

  const auto gauss = check_mp_lemma(B, Density::gaussian(1.0), B, FractionalOrder(0.5), quad);
  CHECK(gauss.pass);
  CHECK(gauss.margin > 0.0);

  const auto bad = check_mp_lemma(B, Density::uniform(0.5), B, FractionalOrder(0.5), quad);
  CHECK(bad.status == ReportStatus::Inapplicable);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("Hoelder step") {
  const auto grid = SphereGrid::make(3, 4000);
  const auto ball = check_holder_step(StarBody::ball(3), FractionalOrder(0.5), grid);
  CHECK(ball.pass);
  CHECK(ball.tight);
  CHECK(ball.relative_gap < 1e-13);

  const auto E = check_holder_step(StarBody::ellipsoid(vec({2, 1, 1})), FractionalOrder(0.5), grid);
  CHECK(E.pass);
  CHECK(E.margin > 1e-3 * E.rhs);
  CHECK_FALSE(E.tight);

  CHECK(check_holder_step(StarBody::lp_ball(3, 1.0), FractionalOrder(1.2), grid).pass);
}

TEST_CASE("d_ovr defaults by body kind") {
  CHECK(default_dovr(StarBody::ball(3)).value == 1.0);
  CHECK(default_dovr(StarBody::ellipsoid(vec({2, 1, 1}))).source == DovrSource::IntersectionBody);
  CHECK(default_dovr(StarBody::lp_ball(3, 1.5)).value == 1.0);
  CHECK(default_dovr(StarBody::cube(3)).value == std::numbers::e);
  CHECK(default_dovr(StarBody::scaled(StarBody::cube(3), 0.3)).source == DovrSource::Unconditional);
  CHECK(default_dovr(StarBody::lp_ball(3, 4.0)).value == doctest::Approx(2.0));
  CHECK(default_dovr(StarBody::lp_ball(3, 4.0), {.c_lp = 0.1}).value == 1.0);
  const auto qsum = radial_q_sum(StarBody::ball(3), StarBody::ellipsoid(vec({2, 1, 1})), 1.0);
  const auto d = default_dovr(qsum, {.ellipsoid_samples = 400});
  CHECK(d.source == DovrSource::EnclosingEllipsoid);
  CHECK(d.value >= 1.0);
  CHECK_THROWS_AS(DovrBound::user(0.9), DomainError);
}

TEST_CASE("slicing inequality") {
  const auto quad = light();
  const auto B = scale_to_volume_one(StarBody::ball(3));
  const auto worked = check_theorem2(B, Density::uniform(), FractionalOrder(0.0), default_dovr(B), quad);
  CHECK(worked.pass);
  CHECK(worked.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rel_err(worked.rhs, 1.5 * volume1_ball_value(3, FractionalOrder(0.0))) < 1e-9);
  CHECK(worked.rhs == doctest::Approx(1.8135).epsilon(1e-3));
  CHECK(worked.dovr_source == "intersection-body");
  CHECK(diag(worked, "rhs_exact_constant") <= worked.rhs * (1.0 + 1e-12));

  const auto l1 = scale_to_volume_one(StarBody::lp_ball(3, 1.0));
  const auto r1 = check_theorem2(l1, Density::uniform(), FractionalOrder(0.5), default_dovr(l1), quad);
  CHECK(r1.pass);
  CHECK(r1.margin > 0.0);

  const auto cube = scale_to_volume_one(StarBody::cube(3));
  const auto rc = check_theorem2(cube, Density::uniform(), FractionalOrder(0.5), default_dovr(cube), quad);
  CHECK(rc.pass);
  CHECK(rc.dovr_source == "unconditional");

  const auto enclosing = default_dovr(radial_q_sum(l1, l1, 1.0), {.ellipsoid_samples = 400});
  const auto re = check_theorem2(l1, Density::uniform(), FractionalOrder(0.5), enclosing, quad);
  CHECK(re.pass);

  CHECK_THROWS_AS(check_theorem2(B, Density::uniform(), FractionalOrder(2.5), default_dovr(B), quad), DomainError);
  CHECK_THROWS_AS(check_theorem2(B, Density::uniform(), FractionalOrder(0.5), DovrBound{0.5, DovrSource::UserSupplied},
                                 quad),
                  DomainError);
}

TEST_CASE("slicing inequality is scale invariant for f = 1") {
  const auto quad = light();
  const auto E = scale_to_volume_one(StarBody::ellipsoid(vec({2, 1, 0.7})));
  const FractionalOrder q(0.5);
  const auto base = check_theorem2(E, Density::uniform(), q, default_dovr(E), quad);
  for (double lambda : {0.5, 2.0}) {
    const auto scaled = check_theorem2(StarBody::scaled(E, lambda), Density::uniform(), q, default_dovr(E), quad);
    CAPTURE(lambda);
    CHECK(rel_err(scaled.lhs, std::pow(lambda, 3) * base.lhs) < 1e-12);
    CHECK(rel_err(scaled.rhs / scaled.lhs, base.rhs / base.lhs) < 1e-8);
    CHECK(scaled.pass == base.pass);
  }
}

TEST_CASE("comparison theorem") {
  const auto quad = light();
  const auto B = scale_to_volume_one(StarBody::ball(3));
  const auto g = Density::uniform();
  const auto half = check_theorem3(B, Density::uniform(0.5), B, g, FractionalOrder(0.5), default_dovr(B), quad, 200);
  CHECK(half.status == ReportStatus::Pass);
  CHECK(half.lhs == doctest::Approx(0.5));
  CHECK(half.rhs == doctest::Approx(3.0 / 1.5));
  CHECK(diag(half, "hypothesis_directions") >= 200);

  const auto inner = StarBody::scaled(B, 0.8);
  for (double q : {0.0, 0.5}) {
    const auto nested = check_theorem3(inner, g, B, g, FractionalOrder(q), default_dovr(inner), quad, 200);
    CAPTURE(q);
    CHECK(nested.status == ReportStatus::Pass);
    CHECK(nested.margin > 0.0);
  }

  const auto violated = check_theorem3(B, Density::uniform(2.0), B, g, FractionalOrder(0.5), default_dovr(B), quad, 200);
  CHECK(violated.status == ReportStatus::Inapplicable);
  CHECK(violated.diagnostic_value("witness_0").has_value());

  const auto unnormalized =
      check_theorem3(B, Density::uniform(0.5), B, Density::uniform(2.0), FractionalOrder(0.5), default_dovr(B), quad);
  CHECK(unnormalized.status == ReportStatus::Inapplicable);
}

TEST_CASE("lower bound for the maximal derivative") {
  const auto quad = light();
  const auto B = scale_to_volume_one(StarBody::ball(3));
  const auto r = check_theorem1(B, Density::uniform(), FractionalOrder(0.0), {.c = 0.05}, quad);
  CHECK(r.pass);
  CHECK(r.rhs == doctest::Approx(1.2090).epsilon(1e-4));
  const double l = std::log(3.0 * std::numbers::e);
  CHECK(rel_err(diag(r, "implied_constant"), r.rhs * std::sqrt(3.0 * l * l * l)) < 1e-12);
  CHECK(diag(r, "via_theorem2_dovr_lower_bound") <= r.rhs);

  // Passing at c implies passing at every smaller c; failing just above the implied constant.
  const double implied = diag(r, "implied_constant");
  CHECK(check_theorem1(B, Density::uniform(), FractionalOrder(0.0), {.c = 0.5 * implied}, quad).pass);
  CHECK_FALSE(check_theorem1(B, Density::uniform(), FractionalOrder(0.0), {.c = 1.01 * implied}, quad).pass);

  const auto odd = check_theorem1(B, Density::uniform(), FractionalOrder::continuous_limit(1.0), {.c = 0.05}, quad);
  CHECK(odd.pass);
  CHECK(odd.rhs > 0.0);

  const auto cube = scale_to_volume_one(StarBody::cube(3));
  CHECK(check_theorem1(cube, Density::uniform(), FractionalOrder(0.5), {.c = 0.01}, quad).pass);

  const auto big = check_theorem1(StarBody::ball(3), Density::uniform(), FractionalOrder(0.5), {.c = 0.05}, quad);
  CHECK(big.status == ReportStatus::Inapplicable);
  CHECK_THROWS_AS(check_theorem1(B, Density::uniform(), FractionalOrder(1.5), {.c = 0.05}, quad), DomainError);
}
