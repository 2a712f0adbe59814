#include "radonfd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "radonfd/errors.hpp"
#include "radonfd/format.hpp"
#include "radonfd/quadrature.hpp"

namespace radonfd {

std::string_view to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

std::string_view to_string(DovrSource source) {
  switch (source) {
    case DovrSource::IntersectionBody: return "intersection-body";
    case DovrSource::Unconditional: return "unconditional";
    case DovrSource::LpSubspace: return "lp-subspace";
    case DovrSource::Kpz: return "kpz";
    case DovrSource::EnclosingEllipsoid: return "enclosing-ellipsoid";
    case DovrSource::UserSupplied: return "user";
  }
  return "unknown";
}

std::optional<double> InequalityReport::diagnostic_value(std::string_view key) const {
  for (const auto& [k, v] : diagnostics) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<std::string> InequalityReport::input_value(std::string_view key) const {
  for (const auto& [k, v] : inputs) {
    if (k == key) return v;
  }
  return std::nullopt;
}

DovrBound DovrBound::user(double value) {
  if (!(value >= 1.0)) throw DomainError("d_ovr bound must be >= 1");
  return {value, DovrSource::UserSupplied};
}

DovrBound default_dovr(const StarBody& K, const DovrOptions& options) {
  const StarBody::Kind* kind = &K.kind();
  while (const auto* s = std::get_if<body::Scaled>(kind)) kind = &s->base->kind();
  if (std::holds_alternative<body::Ball>(*kind) || std::holds_alternative<body::Ellipsoid>(*kind)) {
    return {1.0, DovrSource::IntersectionBody};
  }
  if (const auto* lp = std::get_if<body::LpBall>(kind)) {
    if (std::isinf(lp->p)) return {std::numbers::e, DovrSource::Unconditional};
    if (lp->p <= 2.0) return {1.0, DovrSource::LpSubspace};
    return {std::max(1.0, options.c_lp * std::sqrt(lp->p)), DovrSource::LpSubspace};
  }
  const auto e = enclosing_ellipsoid_dovr(K, options.ellipsoid_samples, options.seed);
  return {std::max(1.0, e.volume_ratio), DovrSource::EnclosingEllipsoid};
}

void finalize_inequality(InequalityReport& report, double estimated_error, double floor) {
  report.equality = false;
  report.margin = report.rhs - report.lhs;
  const double scale = std::max(std::abs(report.lhs), std::abs(report.rhs));
  report.relative_gap = scale > 0.0 ? std::abs(report.margin) / scale : 0.0;
  report.tolerance = std::max(10.0 * estimated_error, floor * scale);
  report.pass = report.margin >= -report.tolerance;
  report.tight = std::abs(report.margin) <= std::max(report.tolerance, 1e-9 * scale);
  report.status = report.pass ? ReportStatus::Pass : ReportStatus::Fail;
  report.diagnostic("estimated_error", estimated_error);
}

void finalize_equality(InequalityReport& report, double tolerance) {
  report.equality = true;
  report.margin = report.rhs - report.lhs;
  const double scale = std::max(std::abs(report.lhs), std::abs(report.rhs));
  report.relative_gap = scale > 0.0 ? std::abs(report.margin) / scale : 0.0;
  report.tolerance = tolerance;
  report.pass = report.relative_gap <= tolerance;
  report.tight = true;
  report.status = report.pass ? ReportStatus::Pass : ReportStatus::Fail;
}

namespace {

void mark_inapplicable(InequalityReport& report, std::string reason) {
  report.pass = false;
  report.status = ReportStatus::Inapplicable;
  report.flag("inapplicable", std::move(reason));
}

void require_order(const FractionalOrder& q, int n, double lo, double hi, bool lo_inclusive, bool hi_inclusive,
                   const char* what) {
  const double v = q.value();
  const bool lo_ok = lo_inclusive ? v >= lo : v > lo;
  const bool hi_ok = hi_inclusive ? v <= hi : v < hi;
  if (!lo_ok || !hi_ok) {
    throw DomainError(std::string(what) + ": order q=" + format_shortest(v) + " outside its range for n=" +
                      std::to_string(n));
  }
}

void require_even(const Density& f, const char* what) {
  if (!f.even) throw DomainError(std::string(what) + ": density must be even");
}

std::string smoothness_flag(const StarBody& K) {
  if (K.is_ellipsoidal()) return "infinitely smooth body";
  return "body is not infinitely smooth; checked outside the smoothness hypothesis";
}

/// Value on the configured grid plus the change from a half-size grid.
struct GridEstimate {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
GridEstimate with_grid_halving(const QuadratureSpec& quad, F&& compute) {
  GridEstimate e;
  e.value = compute(quad);
  QuadratureSpec coarse = quad;
  coarse.volume_grid = std::max<std::size_t>(quad.volume_grid / 2, 16);
  e.error = std::abs(e.value - compute(coarse));
  return e;
}

GridEstimate body_mass(const StarBody& K, const Density& f, const QuadratureSpec& quad) {
  if (f.is_uniform() && K.closed_form_volume()) return {body_integral(K, f, quad), 0.0};
  return with_grid_halving(quad, [&](const QuadratureSpec& q) { return body_integral(K, f, q); });
}

GridEstimate volume_of(const StarBody& K, const QuadratureSpec& quad, std::string& source) {
  if (auto v = K.closed_form_volume()) {
    source = "closed form";
    return {*v, 0.0};
  }
  source = "polar quadrature";
  return with_grid_halving(quad, [&](const QuadratureSpec& q) {
    return volume_polar(K, SphereGrid::make(K.dimension(), q.volume_grid, q.seed));
  });
}

/// Checks g(0) = 1 = ‖g‖_∞ on radial samples of L.
bool check_sup_normalization(const StarBody& L, const Density& g, std::size_t directions, std::uint64_t seed,
                             InequalityReport& report) {
  const int n = L.dimension();
  const double g0 = g(Point::Zero(n));
  const auto grid = SphereGrid::make(n, directions, seed);
  double sup = g0;
  std::size_t samples = 0;
  for (const auto& theta : grid.nodes()) {
    const double r = 1.0 / L.minkowski(theta);
    for (int k = 1; k <= 8; ++k) {
      sup = std::max(sup, g(Point(theta * (r * k / 8.0))));
      ++samples;
    }
  }
  report.diagnostic("g_at_origin", g0);
  report.diagnostic("g_sup_sampled", sup);
  report.flag("g_normalization", "g(0) = 1 = sup g checked on " + std::to_string(samples + 1) + " points");
  return std::abs(g0 - 1.0) <= 1e-12 && sup <= g0 * (1.0 + 1e-12);
}

void add_common_inputs(InequalityReport& report, const StarBody& K, const FractionalOrder& q) {
  report.input("n", std::to_string(K.dimension()));
  report.input("q", format_shortest(q.value()));
  report.input("body", K.spec());
}

}  // namespace

// ---------------------------------------------------------------- corollary1

InequalityReport check_corollary1(int n, const FractionalOrder& q, const QuadratureSpec& quad,
                                  const Corollary1Tolerances& tol) {
  if (n < 2) throw DomainError("corollary1: n must be >= 2");
  if (q.is_limit_order()) throw DomainError("corollary1: compares raw values; limit orders have none");
  require_order(q, n, -1.0, n - 1.0, false, false, "corollary1");

  InequalityReport report;
  report.check = "corollary1";
  report.input("n", std::to_string(n));
  report.input("q", format_shortest(q.value()));
  report.input("body", StarBody::ball(n).spec());

  const double closed = ball_frac_deriv_closed_form(n, q);
  const auto one_d = frac_deriv(section::ball_section(n), q, quad.frac_options());
  const double lambda = -n + q.value() + 1.0;
  const double fourier_const = fourier_power_constant(lambda, n);
  const double fourier = cos_pi(q.value() / 2.0) / (kPi * (n - q.value() - 1.0)) * fourier_const;
  QuadratureSpec numeric = quad;
  numeric.use_analytic_oracles = false;
  const auto pipeline = frac_radon_at_zero(StarBody::ball(n), Density::uniform(), Direction::axis(n, 0), q, numeric);

  report.constant("closed_form", closed,
                  "cos(πq/2) 2^{q+1} π^{(n-2)/2} Γ((q+1)/2) / ((n-q-1) Γ((n-q-1)/2))");
  report.constant("fourier_power_constant", fourier_const,
                  "C(λ,n) = 2^{λ+n} π^{n/2} Γ((λ+n)/2) / Γ(-λ/2), λ = -n+q+1");
  report.constant("fourier_route", fourier, "cos(πq/2) / (π(n-q-1)) · C(-n+q+1, n)");

  auto gap = [&](double v) { return std::abs(v - closed) / std::abs(closed); };
  const double g1 = gap(one_d.value);
  const double g2 = gap(fourier);
  const double g3 = gap(pipeline.raw);
  report.lhs = closed;
  report.rhs = one_d.value;
  report.diagnostic("one_dimensional", one_d.value);
  report.diagnostic("fourier_route", fourier);
  report.diagnostic("pipeline", pipeline.raw);
  report.diagnostic("gap_one_dimensional", g1);
  report.diagnostic("gap_fourier", g2);
  report.diagnostic("gap_pipeline", g3);
  report.diagnostic("pipeline_estimated_error", pipeline.estimated_error);
  report.diagnostic("tolerance_fourier", tol.fourier);
  report.diagnostic("tolerance_pipeline", tol.pipeline);
  report.flag("one_dimensional_route", std::string(to_string(one_d.route)));
  report.flag("pipeline_route", "numeric sections, no analytic oracle");

  finalize_equality(report, tol.one_dimensional);
  report.pass = g1 <= tol.one_dimensional && g2 <= tol.fourier && g3 <= tol.pipeline;
  report.status = report.pass ? ReportStatus::Pass : ReportStatus::Fail;
  return report;
}

// ---------------------------------------------------------------- Parseval

InequalityReport check_parseval(const StarBody& K, double p, const SphereGrid& grid, double tolerance) {
  const int n = K.dimension();
  const auto M = K.ellipsoid_matrix();
  if (!M) throw DomainError("parseval: only balls and ellipsoids have analytic Fourier transforms here");
  if (!(p > 0.0 && p < n)) throw DomainError("parseval: p must lie in (0, n)");
  if (grid.dimension() != n) throw DomainError("parseval: grid dimension mismatch");

  InequalityReport report;
  report.check = "parseval";
  report.input("n", std::to_string(n));
  report.input("p", format_shortest(p));
  report.input("body", K.spec());
  report.input("grid", std::to_string(grid.size()));

  // (‖·‖_K^{-s})^∧(ξ) = |det M| C(-s, n) |Mᵀξ|^{s-n} for K = M B_2^n.
  const double det = std::abs(M->determinant());
  const double c1 = fourier_power_constant(-p, n);
  const double c2 = fourier_power_constant(p - n, n);
  report.constant("C(-p,n)", c1, "Fourier constant of |x|^{-p}");
  report.constant("C(p-n,n)", c2, "Fourier constant of |x|^{p-n}");
  report.constant("det_M", det, "|det M|, K = M B_2^n");

  std::vector<double> left(grid.size());
  std::vector<double> right(grid.size());
  const Eigen::MatrixXd Mt = M->transpose();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point& theta = grid.nodes()[i];
    const double r = (Mt * theta).norm();
    const double f1 = det * c1 * std::pow(r, p - n);
    const double f2 = det * c2 * std::pow(r, -p);
    left[i] = grid.weights()[i] * f1 * f2;
    const double k = K.minkowski(theta);
    right[i] = grid.weights()[i] * std::pow(k, -p) * std::pow(k, p - n);
  }
  report.lhs = pairwise_sum(left);
  report.rhs = std::pow(2.0 * kPi, n) * pairwise_sum(right);
  report.constant("(2π)^n", std::pow(2.0 * kPi, n), "Parseval normalization");
  finalize_equality(report, tolerance);
  return report;
}

// ---------------------------------------------------------------- moment steps

InequalityReport check_mp_moment_identity(const StarBody& D, const FractionalOrder& q, const QuadratureSpec& quad,
                                          double tolerance) {
  const int n = D.dimension();
  require_order(q, n, -1.0, n - 1.0, false, false, "mp-identity");
  InequalityReport report;
  report.check = "mp-identity";
  add_common_inputs(report, D, q);

  const double lhs = moment_integral(D, D, Density::uniform(), 1.0 + q.value(), quad);
  std::string source;
  // The closed-form volume keeps the two sides independent; on a shared grid
  // the identity would hold node by node.
  const auto vol = volume_of(D, quad, source);
  const double factor = n / (n - q.value() - 1.0);
  report.lhs = lhs;
  report.rhs = factor * vol.value;
  report.constant("n/(n-q-1)", factor, "polar integration of ‖x‖_D^{-1-q}");
  report.constant("volume", vol.value, source);
  report.diagnostic("volume_grid_change", vol.error);
  finalize_equality(report, tolerance);
  return report;
}

InequalityReport check_mp_lemma(const StarBody& L, const Density& g, const StarBody& D, const FractionalOrder& q,
                                const QuadratureSpec& quad) {
  const int n = L.dimension();
  if (D.dimension() != n) throw DomainError("mp-lemma: dimension mismatch");
  require_order(q, n, -1.0, n - 1.0, false, false, "mp-lemma");
  InequalityReport report;
  report.check = "mp-lemma";
  add_common_inputs(report, L, q);
  report.input("density", g.spec());
  report.input("D", D.spec());

  const double p = 1.0 + q.value();
  const double a = n - q.value() - 1.0;
  const auto num =
      with_grid_halving(quad, [&](const QuadratureSpec& s) { return moment_integral(D, L, g, p, s); });
  const auto den = with_grid_halving(
      quad, [&](const QuadratureSpec& s) { return moment_integral(D, D, Density::uniform(), p, s); });
  const auto mass = body_mass(L, g, quad);
  std::string source;
  const auto vol = volume_of(D, quad, source);

  report.lhs = std::pow(num.value / den.value, 1.0 / a);
  report.rhs = std::pow(mass.value / vol.value, 1.0 / n);
  report.constant("volume_D", vol.value, source);
  report.diagnostic("moment_L", num.value);
  report.diagnostic("moment_D", den.value);
  report.diagnostic("mass_L", mass.value);

  // First-order propagation of the grid-halving changes.
  const double lhs_err = report.lhs / a * (num.error / num.value + den.error / den.value);
  const double rhs_err = report.rhs / n * (mass.error / mass.value + vol.error / vol.value);
  if (!check_sup_normalization(L, g, 200, quad.seed, report)) {
    mark_inapplicable(report, "g is not normalized by g(0) = 1 = sup g");
    report.margin = report.rhs - report.lhs;
    return report;
  }
  finalize_inequality(report, lhs_err + rhs_err, 1e-12);
  return report;
}

InequalityReport check_holder_step(const StarBody& D, const FractionalOrder& q, const SphereGrid& grid) {
  const int n = D.dimension();
  require_order(q, n, -1.0, n - 1.0, false, false, "holder");
  if (grid.dimension() != n) throw DomainError("holder: grid dimension mismatch");
  InequalityReport report;
  report.check = "holder";
  add_common_inputs(report, D, q);
  report.input("grid", std::to_string(grid.size()));

  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    terms[i] = grid.weights()[i] * std::pow(D.minkowski(grid.nodes()[i]), -1.0 - q.value());
  }
  const double sphere = pairwise_sum(grid.weights());
  // Polar volume on the same nodes: the discrete inequality is then exactly
  // Hölder for the grid measure.
  const double vol = volume_polar(D, grid);
  const double e = (q.value() + 1.0) / n;
  report.lhs = pairwise_sum(terms);
  report.rhs = std::pow(sphere, 1.0 - e) * std::pow(n, e) * std::pow(vol, e);
  report.constant("sphere_measure", sphere, "sum of grid weights = |S^{n-1}|");
  report.constant("volume", vol, "polar quadrature on the same grid");
  if (auto v = D.closed_form_volume()) report.diagnostic("volume_closed_form", *v);
  finalize_inequality(report, 0.0, 1e-12);
  return report;
}

// ---------------------------------------------------------------- thm2

InequalityReport check_theorem2(const StarBody& K, const Density& f, const FractionalOrder& q, const DovrBound& dovr,
                                const QuadratureSpec& quad) {
  const int n = K.dimension();
  require_order(q, n, -1.0, n - 1.0, false, false, "thm2");
  require_even(f, "thm2");
  if (!(dovr.value >= 1.0)) throw DomainError("thm2: d_ovr bound must be >= 1");

  InequalityReport report;
  report.check = "thm2";
  add_common_inputs(report, K, q);
  report.input("density", f.spec());
  report.input("dovr", format_shortest(dovr.value));
  report.dovr_source = std::string(to_string(dovr.source));

  const auto mass = body_mass(K, f, quad);
  std::string vol_source;
  const auto vol = volume_of(K, quad, vol_source);
  const auto best = max_over_directions(K, f, q, quad);

  const double qq = q.value();
  const double c2 = theorem2_constant(n, q);
  const double c2_exact = theorem2_exact_constant(n, q);
  const double geometry = std::pow(vol.value, (qq + 1.0) / n) * std::pow(dovr.value, qq + 1.0);
  report.lhs = mass.value;
  report.rhs = c2 * geometry * best.value;

  report.constant("theorem2_constant", c2, "n / ((n-q-1) 2^q π^{(q-1)/2} Γ((q+1)/2))");
  report.constant("theorem2_exact_constant", c2_exact, "constant before the log-convexity simplification");
  report.constant("volume", vol.value, vol_source);
  report.constant("dovr", dovr.value, std::string(to_string(dovr.source)));
  report.diagnostic("max_value", best.value);
  report.diagnostic("max_grid_value", best.grid_value);
  report.diagnostic("max_grid_mean", best.grid_mean);
  report.diagnostic("max_grid_min", best.grid_min);
  report.diagnostic("max_estimated_error", best.estimated_error);
  report.diagnostic("directions", static_cast<double>(best.grid_size));
  report.diagnostic("evaluations", static_cast<double>(best.evaluations));
  report.diagnostic("rhs_exact_constant", c2_exact * geometry * best.value);
  report.diagnostic("implied_constant", best.value != 0.0 ? mass.value / (geometry * best.value) : 0.0);
  report.flag("smoothness", smoothness_flag(K));
  report.flag("max_sign", best.value > 0.0 ? "positive" : "non-positive");
  if (q.is_limit_order()) report.flag("odd_order", "normalized derivative taken as the continuous limit");
  if (best.unbounded) {
    // Near a vertex direction the section function has a kink at 0, so the
    // normalized derivative grows without bound there.
    report.flag("max_over_directions",
                "supremum is unbounded for polytopes at q >= 1; the grid maximum is a finite lower estimate");
  }
  for (Eigen::Index i = 0; i < best.direction.size(); ++i) {
    report.diagnostic("argmax_" + std::to_string(i), best.direction[i]);
  }

  const double rhs_err = c2 * geometry * best.estimated_error + report.rhs * (qq + 1.0) / n * vol.error / vol.value;
  finalize_inequality(report, mass.error + rhs_err, 1e-12);
  return report;
}

// ---------------------------------------------------------------- thm3

InequalityReport check_theorem3(const StarBody& K, const Density& f, const StarBody& L, const Density& g,
                                const FractionalOrder& q, const DovrBound& dovr, const QuadratureSpec& quad,
                                std::size_t hypothesis_directions) {
  const int n = K.dimension();
  if (L.dimension() != n) throw DomainError("thm3: dimension mismatch");
  require_order(q, n, -1.0, n - 1.0, false, false, "thm3");
  require_even(f, "thm3");
  require_even(g, "thm3");
  if (!(dovr.value >= 1.0)) throw DomainError("thm3: d_ovr bound must be >= 1");
  if (hypothesis_directions == 0) throw DomainError("thm3: hypothesis grid is empty");

  InequalityReport report;
  report.check = "thm3";
  add_common_inputs(report, K, q);
  report.input("density", f.spec());
  report.input("L", L.spec());
  report.input("g", g.spec());
  report.input("dovr", format_shortest(dovr.value));
  report.dovr_source = std::string(to_string(dovr.source));
  report.flag("smoothness", smoothness_flag(K) + "; L: " + smoothness_flag(L));

  const double qq = q.value();
  const auto mass_f = body_mass(K, f, quad);
  const auto mass_g = body_mass(L, g, quad);
  std::string vol_source;
  const auto vol = volume_of(K, quad, vol_source);
  const double factor = n / (n - qq - 1.0);
  report.lhs = mass_f.value;
  report.rhs = factor * std::pow(dovr.value, qq + 1.0) * std::pow(mass_g.value, (n - qq - 1.0) / n) *
               std::pow(vol.value, (qq + 1.0) / n);
  report.constant("n/(n-q-1)", factor, "conclusion constant");
  report.constant("volume", vol.value, vol_source);
  report.constant("dovr", dovr.value, std::string(to_string(dovr.source)));
  report.diagnostic("mass_g", mass_g.value);

  if (!check_sup_normalization(L, g, 200, quad.seed, report)) {
    mark_inapplicable(report, "g is not normalized by g(0) = 1 = sup g");
    report.margin = report.rhs - report.lhs;
    return report;
  }

  // Both densities are even, so antipodal directions repeat; the grid holds
  // twice the requested count and only its first half is evaluated.
  const auto grid = SphereGrid::make(n, 2 * hypothesis_directions, quad.seed);
  const auto vf = frac_radon_on_grid(K, f, q, grid, quad);
  const auto vg = frac_radon_on_grid(L, g, q, grid, quad);
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t witness = vf.size();
  for (std::size_t i = 0; i < vf.size(); ++i) {
    const double slack = 10.0 * (vf[i].estimated_error + vg[i].estimated_error) + 1e-12 * std::abs(vg[i].normalized);
    const double excess = vf[i].normalized - vg[i].normalized;
    if (excess > worst) worst = excess;
    if (excess > slack && witness == vf.size()) witness = i;
  }
  report.diagnostic("hypothesis_directions", static_cast<double>(vf.size()));
  report.diagnostic("hypothesis_worst_excess", worst);
  if (witness != vf.size()) {
    report.diagnostic("witness_f_value", vf[witness].normalized);
    report.diagnostic("witness_g_value", vg[witness].normalized);
    for (Eigen::Index i = 0; i < vf[witness].direction.size(); ++i) {
      report.diagnostic("witness_" + std::to_string(i), vf[witness].direction[i]);
    }
    mark_inapplicable(report, "hypothesis fails at a grid direction (see witness)");
    report.margin = report.rhs - report.lhs;
    return report;
  }
  report.flag("hypothesis", "verified on " + std::to_string(vf.size()) +
                                " grid directions (with antipodes, a finite grid, not all of the sphere)");

  const double rhs_err = report.rhs * ((n - qq - 1.0) / n * mass_g.error / mass_g.value +
                                       (qq + 1.0) / n * vol.error / vol.value);
  finalize_inequality(report, mass_f.error + rhs_err, 1e-12);
  return report;
}

// ---------------------------------------------------------------- thm1

double theorem1_implied_constant(int n, double q, double value) {
  if (!(value > 0.0)) return 0.0;
  const double l = std::log(n * std::numbers::e / (q + 1.0));
  return std::pow(value, 1.0 / (q + 1.0)) * std::sqrt(n * l * l * l) / (q + 1.0);
}

InequalityReport check_theorem1(const StarBody& K, const Density& f, const FractionalOrder& q,
                                const Theorem1Options& options, const QuadratureSpec& quad) {
  const int n = K.dimension();
  require_order(q, n, 0.0, n - 2.0, true, true, "thm1");
  require_even(f, "thm1");
  if (!(options.c > 0.0)) throw DomainError("thm1: c must be positive");

  InequalityReport report;
  report.check = "thm1";
  add_common_inputs(report, K, q);
  report.input("density", f.spec());
  report.input("c", format_shortest(options.c));
  report.flag("smoothness", smoothness_flag(K));
  if (q.is_limit_order()) report.flag("odd_order", "normalized derivative taken as the continuous limit");

  const auto mass = body_mass(K, f, quad);
  std::string vol_source;
  const auto vol = volume_of(K, quad, vol_source);
  report.diagnostic("volume", vol.value);
  report.diagnostic("mass", mass.value);

  const double qq = q.value();
  const double bound = theorem1_lower_bound(n, q, options.c);
  const auto best = max_over_directions(K, f, q, quad);
  report.lhs = bound;
  report.rhs = best.value;
  report.constant("theorem1_lower_bound", bound, "(c (q+1) / sqrt(n log^3(ne/(q+1))))^{q+1}");

  const double implied = theorem1_implied_constant(n, qq, best.value);
  report.diagnostic("implied_constant", implied);
  report.diagnostic("max_estimated_error", best.estimated_error);
  report.diagnostic("directions", static_cast<double>(best.grid_size));
  for (Eigen::Index i = 0; i < best.direction.size(); ++i) {
    report.diagnostic("argmax_" + std::to_string(i), best.direction[i]);
  }

  // Route through the slicing inequality: 1 <= c2 |K|^{(q+1)/n} d^{q+1} max.
  const double c2 = theorem2_constant(n, q);
  const double kpz = kpz_dovr_bound(n, qq + 1.0, options.C_kpz);
  const DovrBound dovr = default_dovr(K);
  const double vol_factor = std::pow(vol.value, (qq + 1.0) / n);
  report.constant("theorem2_constant", c2, "n / ((n-q-1) 2^q π^{(q-1)/2} Γ((q+1)/2))");
  report.constant("kpz_dovr_bound", kpz, "C sqrt(n log^3(ne/(q+1)) / (q+1)) with the caller's C");
  report.constant("dovr", dovr.value, std::string(to_string(dovr.source)));
  report.diagnostic("via_theorem2_kpz_lower_bound", mass.value / (c2 * vol_factor * std::pow(kpz, qq + 1.0)));
  report.diagnostic("via_theorem2_dovr_lower_bound", mass.value / (c2 * vol_factor * std::pow(dovr.value, qq + 1.0)));
  report.diagnostic("e_slack", std::pow(std::numbers::e, qq + 1.0) - n / (n - qq - 1.0));
  report.flag("e_slack", n / (n - qq - 1.0) <= std::pow(std::numbers::e, qq + 1.0) ? "n/(n-q-1) <= e^{q+1}"
                                                                                     : "n/(n-q-1) > e^{q+1}");

  const bool normalized = std::abs(vol.value - 1.0) <= 1e-6 && std::abs(mass.value - 1.0) <= 1e-6;
  if (!normalized) {
    mark_inapplicable(report, "requires |K| = 1 and a probability density");
    report.margin = report.rhs - report.lhs;
    return report;
  }
  report.flag("normalization", "|K| = 1 and ∫f = 1 within 1e-6");
  finalize_inequality(report, best.estimated_error, 1e-12);
  return report;
}

}  // namespace radonfd
