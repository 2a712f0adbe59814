#include "radonfd/radon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <optional>

#include "radonfd/errors.hpp"
#include "radonfd/quadrature.hpp"

namespace radonfd {

namespace {

std::string number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

// ---------------------------------------------------------------- Density

Density Density::uniform(double c) {
  if (!(c >= 0.0)) throw DomainError("density factor must be non-negative");
  Density f;
  f.normalization = c;
  return f;
}

Density Density::gaussian(double sigma, double c) {
  if (!(sigma > 0.0)) throw DomainError("gaussian density needs sigma > 0");
  Density f = uniform(c);
  f.kind = DensityKind::GaussianRestricted;
  f.sigma = sigma;
  return f;
}

Density Density::polynomial_even(std::vector<double> coeffs, double c) {
  if (coeffs.empty()) throw DomainError("polynomial density needs coefficients");
  for (double a : coeffs) {
    if (!(a >= 0.0)) throw DomainError("polynomial density coefficients must be non-negative");
  }
  Density f = uniform(c);
  f.kind = DensityKind::PolynomialEven;
  f.coeffs = std::move(coeffs);
  return f;
}

Density Density::from_function(std::function<double(const Point&)> fn, bool even, std::string label) {
  if (!fn) throw DomainError("density needs an evaluator");
  Density f;
  f.kind = DensityKind::Custom;
  f.custom = std::move(fn);
  f.even = even;
  f.label = std::move(label);
  return f;
}

double Density::operator()(const Point& x) const {
  switch (kind) {
    case DensityKind::Uniform: return normalization;
    case DensityKind::GaussianRestricted: return normalization * std::exp(-0.5 * x.squaredNorm() / (sigma * sigma));
    case DensityKind::PolynomialEven: {
      const double r2 = x.squaredNorm();
      double v = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * r2 + *it;
      return normalization * v;
    }
    case DensityKind::Custom: return normalization * custom(x);
  }
  return 0.0;
}

Density Density::scaled(double factor) const {
  if (!(factor >= 0.0)) throw DomainError("density factor must be non-negative");
  Density f = *this;
  f.normalization *= factor;
  return f;
}

std::string Density::spec() const {
  std::string s;
  switch (kind) {
    case DensityKind::Uniform: s = "uniform"; break;
    case DensityKind::GaussianRestricted: s = "gaussian:sigma=" + number(sigma); break;
    case DensityKind::PolynomialEven:
      s = "poly:a=";
      for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + number(coeffs[i]);
      break;
    case DensityKind::Custom: s = "custom:" + label; break;
  }
  if (normalization != 1.0) s += std::string(s.find(':') == std::string::npos ? ":" : ",") + "c=" + number(normalization);
  return s;
}

Density parse_density(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  double c = 1.0;
  double sigma = 1.0;
  std::vector<double> coeffs;
  std::string current;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    const std::size_t eq = token.find('=');
    if (eq != std::string_view::npos) {
      current = std::string(token.substr(0, eq));
      token = token.substr(eq + 1);
    }
    const double v = parse_double(token);
    if (current == "c") {
      c = v;
    } else if (current == "sigma" && kind == "gaussian") {
      sigma = v;
    } else if (current == "a" && kind == "poly") {
      coeffs.push_back(v);
    } else {
      throw DomainError("unknown density parameter '" + current + "' for '" + std::string(kind) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (kind == "uniform") return Density::uniform(c);
  if (kind == "gaussian") return Density::gaussian(sigma, c);
  if (kind == "poly") return Density::polynomial_even(coeffs, c);
  throw DomainError("unknown density kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------- QuadratureSpec

FracDerivOptions QuadratureSpec::frac_options() const {
  FracDerivOptions o;
  o.abs_tol = singular_tol;
  o.rel_tol = 0.0;
  return o;
}

void QuadratureSpec::validate() const {
  if (direction_grid < 2 || section_grid < 2 || radial_nodes < 1 || volume_grid < 2) {
    throw DomainError("quadrature grid sizes must be positive");
  }
  if (!(singular_tol > 0.0) || !(bisection_tol > 0.0) || !(section_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
  if (refine_rounds < 0) throw DomainError("refine_rounds must be non-negative");
}

// ---------------------------------------------------------------- moments

double moment_integral(const StarBody& D, const StarBody& K, const Density& f, double p, const QuadratureSpec& quad) {
  const int n = K.dimension();
  if (D.dimension() != n) throw DomainError("moment integral: dimension mismatch");
  if (!(p < n)) throw DomainError("moment integral diverges for p >= n");
  quad.validate();
  const auto grid = SphereGrid::make(n, quad.volume_grid, quad.seed);
  // The integrand is even in θ when f is, and antipodal halves then agree.
  const std::size_t count = f.even ? grid.half_size() : grid.size();
  const double fold = f.even ? 2.0 : 1.0;
  const RadialRule rule(quad.radial_nodes, n - 1.0 - p);
  std::vector<double> terms(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Point& theta = grid.nodes()[i];
    const double r = 1.0 / K.minkowski(theta);
    const double weight = grid.weights()[i] * std::pow(D.minkowski(theta), -p);
    double radial = 0.0;
    if (f.is_uniform()) {
      radial = f.normalization * std::pow(r, n - p) / (n - p);
    } else {
      radial = rule.integrate(r, [&](double s) { return f(Point(s * theta)); });
    }
    terms[i] = fold * weight * radial;
  }
  return pairwise_sum(terms);
}

double body_integral(const StarBody& K, const Density& f, const QuadratureSpec& quad) {
  if (f.is_uniform()) {
    if (auto v = K.closed_form_volume()) return f.normalization * *v;
  }
  return moment_integral(K, K, f, 0.0, quad);
}

Density normalized_on(const Density& f, const StarBody& K, const QuadratureSpec& quad) {
  const double mass = body_integral(K, f, quad);
  if (!(mass > 0.0)) throw DomainError("density has zero mass on the body");
  return f.scaled(1.0 / mass);
}

// ---------------------------------------------------------------- sections

Eigen::MatrixXd orthogonal_complement(const Direction& xi) {
  const Point& x = xi.vector();
  const Eigen::Index n = x.size();
  if (n < 2) throw DomainError("sections need n >= 2");
  // v = ξ + sign(ξ_1) e_1 avoids cancellation; H = I - 2 v vᵀ / vᵀv sends e_1 to -sign(ξ_1) ξ.
  Point v = x;
  v(0) += x(0) >= 0.0 ? 1.0 : -1.0;
  const Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n) - 2.0 * v * v.transpose() / v.squaredNorm();
  return H.rightCols(n - 1);
}

namespace {

struct SectionFrame {
  Point xi;
  Eigen::MatrixXd basis;
  double support = 0.0;
  Point support_point;  // empty when the centre is tξ
  std::vector<Point> thetas;
  std::vector<double> weights;
  std::optional<Polytope> polytope;
  std::vector<double> breakpoints;  // heights (v, ξ) of vertices inside (0, support)
};

SectionFrame make_frame(const StarBody& K, const Direction& xi, const QuadratureSpec& quad) {
  const int n = K.dimension();
  if (xi.dimension() != n) throw DomainError("direction dimension does not match the body");
  SectionFrame frame;
  frame.xi = xi.vector();
  if (auto h = K.support(xi)) {
    frame.support = *h;
    frame.support_point = *K.support_point(xi);
  } else {
    frame.support = K.radial(xi);
  }
  frame.polytope = K.polytope();
  if (frame.polytope) {
    for (const auto& v : frame.polytope->vertices) {
      const double height = v.dot(frame.xi);
      if (height > 1e-12 * frame.support && height < frame.support * (1.0 - 1e-12)) frame.breakpoints.push_back(height);
    }
    std::sort(frame.breakpoints.begin(), frame.breakpoints.end());
    frame.breakpoints.erase(std::unique(frame.breakpoints.begin(), frame.breakpoints.end(),
                                        [&](double a, double b) { return b - a <= 1e-12 * frame.support; }),
                            frame.breakpoints.end());
  }
  const Eigen::MatrixXd basis = orthogonal_complement(xi);
  frame.basis = basis;
  if (n == 3) return frame;
  const auto inner = SphereGrid::make(n - 1, quad.section_grid, quad.seed);
  frame.thetas.reserve(inner.size());
  for (const auto& w : inner.nodes()) frame.thetas.emplace_back(basis * w);
  frame.weights = inner.weights();
  return frame;
}

// ∫_0^ρ s^{n-2} f(centre + s θ) ds
double ray_integral(const StarBody& K, const Density& f, const RadialRule& rule, const Point& centre,
                    const Point& theta) {
  const int n = K.dimension();
  const double rho = K.ray_exit(centre, theta);
  if (f.is_uniform()) return f.normalization * std::pow(rho, n - 1) / (n - 1);
  return rule.integrate(rho, [&](double s) { return f(Point(centre + s * theta)); });
}

// Section of a 3-dimensional polytope: a convex polygon whose corners are
// the crossings of the plane with the edges. Uniform densities use exact
// triangle areas; otherwise each corner-to-corner angular panel is smooth.
double polygon_section(const StarBody& K, const Density& f, const SectionFrame& frame, const RadialRule& rule,
                       const QuadratureSpec& quad, const Point& centre, double t) {
  const Point u = frame.basis.col(0);
  const Point v = frame.basis.col(1);
  std::vector<double> angles;
  std::vector<Eigen::Vector2d> corners;
  const auto& poly = *frame.polytope;
  for (const auto& [a, b] : poly.edges) {
    const double ha = poly.vertices[a].dot(frame.xi) - t;
    const double hb = poly.vertices[b].dot(frame.xi) - t;
    if ((ha > 0.0 && hb > 0.0) || (ha < 0.0 && hb < 0.0) || ha == hb) continue;
    const Point x = poly.vertices[a] + (ha / (ha - hb)) * (poly.vertices[b] - poly.vertices[a]);
    const Eigen::Vector2d local((x - centre).dot(u), (x - centre).dot(v));
    corners.push_back(local);
    angles.push_back(std::atan2(local.y(), local.x()));
  }
  std::vector<std::size_t> order(angles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return angles[i] < angles[j]; });
  std::vector<double> sorted;
  std::vector<Eigen::Vector2d> ring;
  for (std::size_t i : order) {
    if (!sorted.empty() && angles[i] - sorted.back() <= 1e-13) continue;  // a vertex shared by several edges
    sorted.push_back(angles[i]);
    ring.push_back(corners[i]);
  }
  if (sorted.size() > 1 && sorted.back() - sorted.front() >= 2.0 * kPi - 1e-13) {
    sorted.pop_back();
    ring.pop_back();
  }
  if (sorted.size() < 3) return 0.0;
  std::vector<double> panels(sorted.size());
  if (f.is_uniform()) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& p = ring[i];
      const auto& q = ring[(i + 1) % ring.size()];
      panels[i] = 0.5 * std::abs(p.x() * q.y() - p.y() * q.x());
    }
    return f.normalization * pairwise_sum(panels);
  }
  auto g = [&](double phi) { return ray_integral(K, f, rule, centre, Point(std::cos(phi) * u + std::sin(phi) * v)); };
  AdaptiveOptions options{1e-15, quad.section_tol, 200};
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double a = sorted[i];
    const double b = i + 1 < sorted.size() ? sorted[i + 1] : sorted.front() + 2.0 * kPi;
    panels[i] = integrate_adaptive(g, a, b, options).value;
  }
  return pairwise_sum(panels);
}

double section_value(const StarBody& K, const Density& f, const SectionFrame& frame, const RadialRule& rule,
                     const QuadratureSpec& quad, double t) {
  const double T = frame.support;
  if (std::abs(t) >= T * (1.0 - 1e-12)) return 0.0;
  const Point centre = frame.support_point.size() ? Point((t / T) * frame.support_point) : Point(t * frame.xi);
  if (K.dimension() == 3 && frame.polytope) return polygon_section(K, f, frame, rule, quad, centre, t);
  if (K.dimension() == 3) {
    // The boundary of a polygonal section has corners; adaptive panels in the
    // angle resolve them where a fixed grid would not.
    const Point u = frame.basis.col(0);
    const Point v = frame.basis.col(1);
    auto g = [&](double phi) { return ray_integral(K, f, rule, centre, Point(std::cos(phi) * u + std::sin(phi) * v)); };
    constexpr int kPanels = 8;
    AdaptiveOptions options{1e-15, quad.section_tol, 200};
    std::vector<double> panels(kPanels);
    for (int i = 0; i < kPanels; ++i) {
      panels[i] = integrate_adaptive(g, 2.0 * kPi * i / kPanels, 2.0 * kPi * (i + 1) / kPanels, options).value;
    }
    return pairwise_sum(panels);
  }
  std::vector<double> terms(frame.thetas.size());
  for (std::size_t i = 0; i < frame.thetas.size(); ++i) {
    terms[i] = frame.weights[i] * ray_integral(K, f, rule, centre, frame.thetas[i]);
  }
  return pairwise_sum(terms);
}

}  // namespace

double section_integral(const StarBody& K, const Density& f, const Direction& xi, double t, const QuadratureSpec& quad) {
  quad.validate();
  const auto frame = make_frame(K, xi, quad);
  const RadialRule rule(quad.radial_nodes, K.dimension() - 2.0);
  return section_value(K, f, frame, rule, quad, t);
}

SectionFunction parallel_section_function(const StarBody& K, const Direction& xi, const Density& f,
                                          const QuadratureSpec& quad) {
  quad.validate();
  const int n = K.dimension();
  auto frame = std::make_shared<const SectionFrame>(make_frame(K, xi, quad));
  auto rule = std::make_shared<const RadialRule>(quad.radial_nodes, n - 2.0);
  SectionFunction h;
  h.evaluate = [K, f, frame, rule, quad](double t) { return section_value(K, f, *frame, *rule, quad, t); };
  h.support_radius = frame->support;
  h.max_smoothness = 4;
  h.even = f.even;
  h.breakpoints = frame->breakpoints;
  if (quad.use_analytic_oracles && f.is_uniform() && K.is_ellipsoidal()) {
    // K = M B: A(t) = |det M| / r · |B^{n-1}| (1 - t²/r²)^{(n-1)/2}, r = |Mᵀξ| = h_K(ξ).
    const Eigen::MatrixXd M = *K.ellipsoid_matrix();
    const double r = (M.transpose() * xi.vector()).norm();
    const double scale = f.normalization * std::abs(M.determinant()) / r * ball_volume(n - 1);
    const auto oracle = section::power_profile(0.5 * (n - 1), scale, r);
    h.analytic_coefficient = oracle.analytic_coefficient;
    h.analytic_order = oracle.analytic_order;
  }
  return h;
}

// ---------------------------------------------------------------- fractional derivatives

FracRadonResult frac_radon_at_zero(const StarBody& K, const Density& f, const Direction& xi, const FractionalOrder& q,
                                   const QuadratureSpec& quad) {
  const auto h = parallel_section_function(K, xi, f, quad);
  if (!h.analytic_coefficient && q.value() >= 4.0) {
    throw DomainError("the numeric section pipeline supports q < 4");
  }
  const auto d = normalized_frac_deriv(h, q, quad.frac_options());
  FracRadonResult r;
  r.direction = xi.vector();
  r.normalized = d.normalized;
  r.raw = d.raw;
  r.estimated_error = d.detail.diagnostics.estimated_error;
  r.detail = d.detail;
  return r;
}

std::vector<FracRadonResult> frac_radon_on_grid(const StarBody& K, const Density& f, const FractionalOrder& q,
                                                const SphereGrid& grid, const QuadratureSpec& quad) {
  const std::size_t count = f.even ? grid.half_size() : grid.size();
  std::vector<FracRadonResult> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(frac_radon_at_zero(K, f, grid.direction(i), q, quad));
  return out;
}

DirectionMax max_over_directions(const StarBody& K, const Density& f, const FractionalOrder& q,
                                 const QuadratureSpec& quad) {
  const int n = K.dimension();
  const auto grid = SphereGrid::make(n, quad.direction_grid, quad.seed);
  const auto values = frac_radon_on_grid(K, f, q, grid, quad);

  DirectionMax best;
  best.grid_size = values.size();
  best.evaluations = values.size();
  std::vector<double> normalized(values.size());
  std::size_t arg = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    normalized[i] = values[i].normalized;
    if (values[i].normalized > values[arg].normalized) arg = i;
  }
  best.grid_index = arg;
  best.grid_value = values[arg].normalized;
  best.grid_mean = pairwise_sum(normalized) / static_cast<double>(normalized.size());
  best.grid_min = *std::min_element(normalized.begin(), normalized.end());
  best.direction = values[arg].direction;
  best.value = values[arg].normalized;
  best.raw = values[arg].raw;
  best.estimated_error = values[arg].estimated_error;
  best.unbounded = K.polytope().has_value() && q.value() >= 1.0;
  if (n < 2 || best.unbounded) return best;

  // Golden-section search along each tangent coordinate of the current best.
  auto evaluate = [&](const Point& v) {
    ++best.evaluations;
    return frac_radon_at_zero(K, f, Direction::normalized(v), q, quad);
  };
  constexpr double kInvPhi = 0.6180339887498949;
  double step = grid.spacing();
  for (int round = 0; round < quad.refine_rounds; ++round, step *= 0.5) {
    const Eigen::MatrixXd tangent = orthogonal_complement(Direction::normalized(best.direction));
    for (Eigen::Index axis = 0; axis < tangent.cols(); ++axis) {
      const Point base = best.direction;
      const Point dir = tangent.col(axis);
      double a = -step;
      double b = step;
      double x1 = b - kInvPhi * (b - a);
      double x2 = a + kInvPhi * (b - a);
      auto r1 = evaluate(base + x1 * dir);
      auto r2 = evaluate(base + x2 * dir);
      for (int it = 0; it < 10; ++it) {
        if (r1.normalized >= r2.normalized) {
          b = x2;
          x2 = x1;
          r2 = r1;
          x1 = b - kInvPhi * (b - a);
          r1 = evaluate(base + x1 * dir);
        } else {
          a = x1;
          x1 = x2;
          r1 = r2;
          x2 = a + kInvPhi * (b - a);
          r2 = evaluate(base + x2 * dir);
        }
      }
      const auto& winner = r1.normalized >= r2.normalized ? r1 : r2;
      if (winner.normalized > best.value) {
        best.value = winner.normalized;
        best.raw = winner.raw;
        best.direction = winner.direction;
        best.estimated_error = winner.estimated_error;
      }
    }
  }
  return best;
}

}  // namespace radonfd
