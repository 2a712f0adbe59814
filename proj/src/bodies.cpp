#include "radonfd/bodies.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "radonfd/errors.hpp"
#include "radonfd/quadrature.hpp"
#include "radonfd/special.hpp"

namespace radonfd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_number(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double lp_norm(const Point& x, double p) {
  if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  const double m = x.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)) / m, p);
  return m * std::pow(s, 1.0 / p);
}

void require_same_dimension(int a, long b) {
  if (a != b) throw DomainError("dimension mismatch");
}

}  // namespace

// ---------------------------------------------------------------- Direction

Direction::Direction(Point v) : v_(std::move(v)) {
  if (v_.size() < 1 || !v_.allFinite() || std::abs(v_.norm() - 1.0) > 1e-12) {
    throw DomainError("direction must be a finite unit vector");
  }
}

Direction Direction::normalized(const Point& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("cannot normalize the zero vector");
  return Direction(Point(v / norm));
}

Direction Direction::axis(int n, int i) {
  Point v = Point::Zero(n);
  v(i) = 1.0;
  return Direction(std::move(v));
}

// ---------------------------------------------------------------- StarBody

StarBody StarBody::ball(int n, double radius) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("ball radius must be positive");
  return StarBody(n, body::Ball{radius});
}

StarBody StarBody::ellipsoid(const Eigen::VectorXd& semi_axes) {
  const auto n = semi_axes.size();
  return ellipsoid(semi_axes, Eigen::MatrixXd::Identity(n, n));
}

StarBody StarBody::ellipsoid(const Eigen::VectorXd& semi_axes, const Eigen::MatrixXd& axes) {
  const auto n = semi_axes.size();
  if (n < 1) throw DomainError("ellipsoid needs at least one semi-axis");
  if (!semi_axes.allFinite() || (semi_axes.array() <= 0.0).any()) {
    throw DomainError("ellipsoid semi-axes must be positive");
  }
  if (axes.rows() != n || axes.cols() != n) throw DomainError("ellipsoid axes must be n x n");
  if (!(axes.transpose() * axes).isApprox(Eigen::MatrixXd::Identity(n, n), 1e-10)) {
    throw DomainError("ellipsoid axes must be orthonormal");
  }
  const bool aligned = axes.isIdentity(0.0);
  return StarBody(static_cast<int>(n), body::Ellipsoid{semi_axes, axes, aligned});
}

StarBody StarBody::lp_ball(int n, double p, double scale) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (!(p >= 1.0)) throw DomainError("lp ball requires p >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("lp ball scale must be positive");
  return StarBody(n, body::LpBall{p, scale});
}

StarBody StarBody::cube(int n, double half_width) { return lp_ball(n, kInf, half_width); }

StarBody StarBody::scaled(const StarBody& base, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw DomainError("scale factor must be positive");
  return StarBody(base.n_, body::Scaled{std::make_shared<const StarBody>(base), factor});
}

StarBody radial_q_sum(const StarBody& K, const StarBody& L, double q) {
  require_same_dimension(K.dimension(), L.dimension());
  if (!(q > 0.0) || !std::isfinite(q)) throw DomainError("radial q-sum requires q > 0");
  std::vector<BodyPtr> parts;
  auto append = [&](const StarBody& B) {
    // Flatten nested sums with the same exponent.
    if (const auto* s = std::get_if<body::RadialQSum>(&B.kind()); s && s->q == q) {
      parts.insert(parts.end(), s->components.begin(), s->components.end());
    } else {
      parts.push_back(std::make_shared<const StarBody>(B));
    }
  };
  append(K);
  append(L);
  return StarBody(K.dimension(), body::RadialQSum{std::move(parts), q});
}

double StarBody::minkowski(const Point& x) const {
  require_same_dimension(n_, x.size());
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) { return x.norm() / b.radius; },
          [&](const body::Ellipsoid& e) {
            if (e.axis_aligned) return x.cwiseQuotient(e.semi_axes).norm();
            return Point(e.axes.transpose() * x).cwiseQuotient(e.semi_axes).norm();
          },
          [&](const body::LpBall& l) { return lp_norm(x, l.p) / l.scale; },
          [&](const body::RadialQSum& s) {
            const double norm = x.norm();
            if (norm == 0.0) return 0.0;
            const Direction theta(Point(x / norm));
            double sum = 0.0;
            for (const auto& c : s.components) sum += std::pow(c->radial(theta), s.q);
            return norm / std::pow(sum, 1.0 / s.q);
          },
          [&](const body::Scaled& s) { return s.base->minkowski(x) / s.factor; },
      },
      kind_);
}

double StarBody::radial(const Direction& theta) const { return 1.0 / minkowski(theta.vector()); }

double StarBody::outer_radius() const {
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) { return b.radius; },
          [&](const body::Ellipsoid& e) { return e.semi_axes.maxCoeff(); },
          [&](const body::LpBall& l) {
            if (l.p <= 2.0) return l.scale;
            const double exponent = std::isinf(l.p) ? 0.5 : 0.5 - 1.0 / l.p;
            return l.scale * std::pow(static_cast<double>(n_), exponent);
          },
          [&](const body::RadialQSum& s) {
            double sum = 0.0;
            for (const auto& c : s.components) sum += std::pow(c->outer_radius(), s.q);
            return std::pow(sum, 1.0 / s.q);
          },
          [&](const body::Scaled& s) { return s.factor * s.base->outer_radius(); },
      },
      kind_);
}

std::optional<Point> StarBody::support_point(const Direction& xi) const {
  require_same_dimension(n_, xi.dimension());
  const Point& v = xi.vector();
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) -> std::optional<Point> { return Point(b.radius * v); },
          [&](const body::Ellipsoid& e) -> std::optional<Point> {
            const Eigen::MatrixXd M = e.axes * e.semi_axes.asDiagonal();
            const Point w = M.transpose() * v;
            return Point(M * w / w.norm());
          },
          [&](const body::LpBall& l) -> std::optional<Point> {
            Point x = Point::Zero(n_);
            if (std::isinf(l.p)) {
              for (int i = 0; i < n_; ++i) x(i) = (v(i) > 0.0) - (v(i) < 0.0);
            } else if (l.p == 1.0) {
              Eigen::Index k;
              v.cwiseAbs().maxCoeff(&k);
              x(k) = v(k) > 0.0 ? 1.0 : -1.0;
            } else {
              const double dual = l.p / (l.p - 1.0);
              const double dual_norm = lp_norm(v, dual);
              for (int i = 0; i < n_; ++i) {
                const double a = std::abs(v(i)) / dual_norm;
                x(i) = std::copysign(std::pow(a, dual - 1.0), v(i));
              }
            }
            return Point(l.scale * x);
          },
          [&](const body::RadialQSum&) -> std::optional<Point> { return std::nullopt; },
          [&](const body::Scaled& s) -> std::optional<Point> {
            auto p = s.base->support_point(xi);
            if (!p) return std::nullopt;
            return Point(s.factor * *p);
          },
      },
      kind_);
}

std::optional<double> StarBody::support(const Direction& xi) const {
  require_same_dimension(n_, xi.dimension());
  const Point& v = xi.vector();
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) -> std::optional<double> { return b.radius; },
          [&](const body::Ellipsoid& e) -> std::optional<double> {
            return Point(e.semi_axes.asDiagonal() * (e.axes.transpose() * v)).norm();
          },
          [&](const body::LpBall& l) -> std::optional<double> {
            const double dual = std::isinf(l.p) ? 1.0 : (l.p == 1.0 ? kInf : l.p / (l.p - 1.0));
            return l.scale * lp_norm(v, dual);
          },
          [&](const body::RadialQSum&) -> std::optional<double> { return std::nullopt; },
          [&](const body::Scaled& s) -> std::optional<double> {
            auto h = s.base->support(xi);
            if (!h) return std::nullopt;
            return s.factor * *h;
          },
      },
      kind_);
}

namespace {

// Σ|p_i + s θ_i| is convex and piecewise linear in s: walk its breakpoints.
double l1_exit(const Point& p, const Point& theta, double level) {
  std::vector<std::pair<double, double>> kinks;  // (s, slope increase)
  double value = 0.0;
  double slope = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    value += std::abs(p(i));
    if (theta(i) == 0.0) continue;
    const double side = p(i) != 0.0 ? std::copysign(1.0, p(i)) : std::copysign(1.0, theta(i));
    slope += side * theta(i);
    const double s = -p(i) / theta(i);
    if (s > 0.0) kinks.emplace_back(s, 2.0 * std::abs(theta(i)));
  }
  std::sort(kinks.begin(), kinks.end());
  double at = 0.0;
  for (const auto& [s, jump] : kinks) {
    const double next = value + slope * (s - at);
    if (slope > 0.0 && next >= level) break;
    value = next;
    at = s;
    slope += jump;
  }
  return at + (level - value) / slope;
}

}  // namespace

double StarBody::ray_exit(const Point& p, const Point& theta) const {
  require_same_dimension(n_, p.size());
  require_same_dimension(n_, theta.size());
  auto quadratic_exit = [](const Point& u, const Point& w) {
    // largest s with |u + s w| = 1, |u| < 1
    const double a = w.squaredNorm();
    const double b = u.dot(w);
    const double c = u.squaredNorm() - 1.0;
    const double disc = std::sqrt(std::max(0.0, b * b - a * c));
    // stable root: s = -c / (b + disc) when b >= 0
    return b >= 0.0 ? (-c) / (b + disc) : (disc - b) / a;
  };
  auto bisect = [&]() {
    double lo = 0.0;
    double hi = 2.0 * outer_radius() / theta.norm();
    while (hi - lo > 1e-12 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (minkowski(Point(p + mid * theta)) <= 1.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) { return quadratic_exit(p / b.radius, theta / b.radius); },
          [&](const body::Ellipsoid& e) {
            if (e.axis_aligned) {
              return quadratic_exit(p.cwiseQuotient(e.semi_axes), theta.cwiseQuotient(e.semi_axes));
            }
            return quadratic_exit(Point(e.axes.transpose() * p).cwiseQuotient(e.semi_axes),
                                  Point(e.axes.transpose() * theta).cwiseQuotient(e.semi_axes));
          },
          [&](const body::LpBall& l) {
            if (l.p == 1.0) return l1_exit(p, theta, l.scale);
            if (!std::isinf(l.p)) return bisect();
            double s = kInf;
            for (int i = 0; i < n_; ++i) {
              if (theta(i) != 0.0) s = std::min(s, (std::copysign(l.scale, theta(i)) - p(i)) / theta(i));
            }
            return s;
          },
          [&](const body::RadialQSum&) { return bisect(); },
          [&](const body::Scaled& s) { return s.factor * s.base->ray_exit(p / s.factor, theta); },
      },
      kind_);
}

std::optional<double> StarBody::closed_form_volume() const {
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) -> std::optional<double> {
            return ball_volume(n_) * std::pow(b.radius, n_);
          },
          [&](const body::Ellipsoid& e) -> std::optional<double> {
            return ball_volume(n_) * e.semi_axes.prod();
          },
          [&](const body::LpBall& l) -> std::optional<double> {
            if (std::isinf(l.p)) return std::pow(2.0 * l.scale, n_);
            const double log_v = n_ * std::log(2.0 * l.scale) + n_ * log_gamma(1.0 + 1.0 / l.p) -
                                 log_gamma(1.0 + n_ / l.p);
            return std::exp(log_v);
          },
          [&](const body::RadialQSum&) -> std::optional<double> { return std::nullopt; },
          [&](const body::Scaled& s) -> std::optional<double> {
            auto v = s.base->closed_form_volume();
            if (!v) return std::nullopt;
            return *v * std::pow(s.factor, n_);
          },
      },
      kind_);
}

std::string StarBody::spec() const {
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) { return "ball:r=" + format_number(b.radius); },
          [&](const body::Ellipsoid& e) {
            std::string s = "ellipsoid:a=";
            for (Eigen::Index i = 0; i < e.semi_axes.size(); ++i) {
              if (i) s += ",";
              s += format_number(e.semi_axes(i));
            }
            if (!e.axis_aligned) {
              s += ",axes=";
              for (Eigen::Index i = 0; i < e.axes.rows(); ++i) {
                for (Eigen::Index j = 0; j < e.axes.cols(); ++j) {
                  if (i || j) s += ",";
                  s += format_number(e.axes(i, j));
                }
              }
            }
            return s;
          },
          [&](const body::LpBall& l) {
            if (std::isinf(l.p)) return "cube:scale=" + format_number(l.scale);
            return "lp:p=" + format_number(l.p) + ",scale=" + format_number(l.scale);
          },
          [&](const body::RadialQSum& s) {
            std::string out = "qsum:q=" + format_number(s.q);
            for (const auto& c : s.components) out += ";" + c->spec();
            return out;
          },
          [&](const body::Scaled& s) { return "scaled:factor=" + format_number(s.factor) + ";" + s.base->spec(); },
      },
      kind_);
}

bool StarBody::is_ball() const {
  if (std::holds_alternative<body::Ball>(kind_)) return true;
  if (const auto* s = std::get_if<body::Scaled>(&kind_)) return s->base->is_ball();
  return false;
}

bool StarBody::is_ellipsoidal() const {
  if (std::holds_alternative<body::Ball>(kind_) || std::holds_alternative<body::Ellipsoid>(kind_)) return true;
  if (const auto* s = std::get_if<body::Scaled>(&kind_)) return s->base->is_ellipsoidal();
  return false;
}

std::optional<Eigen::MatrixXd> StarBody::ellipsoid_matrix() const {
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) -> std::optional<Eigen::MatrixXd> {
            return Eigen::MatrixXd(b.radius * Eigen::MatrixXd::Identity(n_, n_));
          },
          [&](const body::Ellipsoid& e) -> std::optional<Eigen::MatrixXd> {
            return Eigen::MatrixXd(e.axes * e.semi_axes.asDiagonal());
          },
          [&](const body::LpBall&) -> std::optional<Eigen::MatrixXd> { return std::nullopt; },
          [&](const body::RadialQSum&) -> std::optional<Eigen::MatrixXd> { return std::nullopt; },
          [&](const body::Scaled& s) -> std::optional<Eigen::MatrixXd> {
            auto m = s.base->ellipsoid_matrix();
            if (!m) return std::nullopt;
            return Eigen::MatrixXd(s.factor * *m);
          },
      },
      kind_);
}

std::optional<Polytope> StarBody::polytope() const {
  return std::visit(
      Overloaded{
          [&](const body::LpBall& l) -> std::optional<Polytope> {
            Polytope poly;
            if (l.p == 1.0) {
              for (int i = 0; i < n_; ++i) {
                for (double sign : {1.0, -1.0}) poly.vertices.push_back(sign * l.scale * Direction::axis(n_, i).vector());
              }
              // every pair except antipodes
              for (int a = 0; a < 2 * n_; ++a) {
                for (int b = a + 1; b < 2 * n_; ++b) {
                  if (a / 2 != b / 2) poly.edges.emplace_back(a, b);
                }
              }
              return poly;
            }
            if (!std::isinf(l.p) || n_ > 16) return std::nullopt;
            const int count = 1 << n_;
            for (int mask = 0; mask < count; ++mask) {
              Point v(n_);
              for (int i = 0; i < n_; ++i) v(i) = (mask >> i & 1) ? l.scale : -l.scale;
              poly.vertices.push_back(v);
              for (int i = 0; i < n_; ++i) {
                if (!(mask >> i & 1)) poly.edges.emplace_back(mask, mask | (1 << i));
              }
            }
            return poly;
          },
          [&](const body::Scaled& s) -> std::optional<Polytope> {
            auto poly = s.base->polytope();
            if (poly) {
              for (auto& v : poly->vertices) v *= s.factor;
            }
            return poly;
          },
          [&](const auto&) -> std::optional<Polytope> { return std::nullopt; },
      },
      kind_);
}

// ---------------------------------------------------------------- parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token) {
  token = trim(token);
  if (token == "inf" || token == "infinity") return kInf;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw DomainError("invalid number '" + std::string(token) + "' in body spec");
  }
  return v;
}

struct Params {
  std::vector<std::pair<std::string, std::vector<double>>> entries;
  std::vector<std::string> flags;

  const std::vector<double>* find(std::string_view key) const {
    for (const auto& [k, v] : entries) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  double scalar(std::string_view key, double fallback) const {
    const auto* v = find(key);
    if (!v) return fallback;
    if (v->size() != 1) throw DomainError("parameter '" + std::string(key) + "' expects one value");
    return v->front();
  }
};

Params parse_params(std::string_view text) {
  Params params;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    if (!token.empty()) {
      const std::size_t eq = token.find('=');
      if (eq != std::string_view::npos) {
        params.entries.emplace_back(std::string(trim(token.substr(0, eq))),
                                    std::vector<double>{parse_number(token.substr(eq + 1))});
      } else if (!token.empty() && (std::isdigit(static_cast<unsigned char>(token.front())) || token.front() == '.' ||
                                    token.front() == '-' || token == "inf") &&
                 !params.entries.empty()) {
        params.entries.back().second.push_back(parse_number(token));
      } else {
        params.flags.emplace_back(token);
      }
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return params;
}

void check_known(const Params& params, std::initializer_list<std::string_view> keys, std::string_view kind) {
  for (const auto& [k, v] : params.entries) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw DomainError("unknown parameter '" + k + "' for body kind '" + std::string(kind) + "'");
    }
  }
}

}  // namespace

StarBody parse_body(std::string_view spec, int n) {
  spec = trim(spec);
  const std::size_t colon = spec.find(':');
  const std::string_view kind = trim(spec.substr(0, colon));
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (kind == "qsum" || kind == "scaled") {
    const std::size_t semi = rest.find(';');
    if (semi == std::string_view::npos) throw DomainError("'" + std::string(kind) + "' needs component bodies");
    const Params head = parse_params(rest.substr(0, semi));
    std::string_view tail = rest.substr(semi + 1);
    if (kind == "scaled") {
      check_known(head, {"factor"}, kind);
      return StarBody::scaled(parse_body(tail, n), head.scalar("factor", 1.0));
    }
    check_known(head, {"q"}, kind);
    const double q = head.scalar("q", 1.0);
    std::vector<StarBody> parts;
    while (!tail.empty()) {
      const std::size_t next = tail.find(';');
      parts.push_back(parse_body(tail.substr(0, next), n));
      if (next == std::string_view::npos) break;
      tail = tail.substr(next + 1);
    }
    if (parts.size() < 2) throw DomainError("qsum needs at least two components");
    StarBody sum = radial_q_sum(parts[0], parts[1], q);
    for (std::size_t i = 2; i < parts.size(); ++i) sum = radial_q_sum(sum, parts[i], q);
    return sum;
  }

  const Params params = parse_params(rest);
  if (kind == "ball") {
    check_known(params, {"r"}, kind);
    if (n < 1) throw DomainError("ball needs a dimension");
    return StarBody::ball(n, params.scalar("r", 1.0));
  }
  if (kind == "ellipsoid") {
    check_known(params, {"a", "axes"}, kind);
    const auto* a = params.find("a");
    if (!a) throw DomainError("ellipsoid needs semi-axes a=...");
    if (n > 0 && static_cast<int>(a->size()) != n) throw DomainError("ellipsoid semi-axes do not match dimension");
    const auto d = static_cast<Eigen::Index>(a->size());
    const Eigen::VectorXd semi = Eigen::Map<const Eigen::VectorXd>(a->data(), d);
    if (const auto* axes = params.find("axes")) {
      // row-major n x n matrix with orthonormal columns
      if (static_cast<Eigen::Index>(axes->size()) != d * d) throw DomainError("ellipsoid axes need n*n entries");
      const Eigen::MatrixXd m =
          Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(axes->data(), d, d);
      return StarBody::ellipsoid(semi, m);
    }
    return StarBody::ellipsoid(semi);
  }
  if (kind == "lp") {
    check_known(params, {"p", "scale"}, kind);
    if (n < 1) throw DomainError("lp ball needs a dimension");
    return StarBody::lp_ball(n, params.scalar("p", 2.0), params.scalar("scale", 1.0));
  }
  if (kind == "cube") {
    check_known(params, {"scale"}, kind);
    if (n < 1) throw DomainError("cube needs a dimension");
    return StarBody::cube(n, params.scalar("scale", 1.0));
  }
  throw DomainError("unknown body kind '" + std::string(kind) + "'");
}

// ---------------------------------------------------------------- SphereGrid

namespace {

// Box–Muller on top of mt19937_64, whose output sequence is fixed by the
// standard (std::normal_distribution is not).
class PortableGaussian {
 public:
  explicit PortableGaussian(std::uint64_t seed) : engine_(seed) {}
  double operator()() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace

SphereGrid SphereGrid::make(int n, std::size_t approx_size, std::uint64_t seed) {
  if (n < 1) throw DomainError("sphere grid dimension must be positive");
  SphereGrid grid;
  grid.n_ = n;
  std::vector<Point> half;
  if (n == 1) {
    half.push_back(Point::Constant(1, 1.0));
  } else if (n == 2) {
    const std::size_t m = std::max<std::size_t>(2, (approx_size + 3) / 4 * 2);  // half of a multiple of 4
    for (std::size_t k = 0; k < m; ++k) {
      const double angle = kPi * static_cast<double>(k) / static_cast<double>(m);
      Point p(2);
      p << std::cos(angle), std::sin(angle);
      half.push_back(p);
    }
  } else {
    const std::size_t m = std::max<std::size_t>(static_cast<std::size_t>(n) + 1, approx_size / 2);
    if (n == 3) {
      // A plain lattice: extra nodes on the axes bias the equal weights.
      const double golden = kPi * (3.0 - std::sqrt(5.0));
      for (std::size_t i = 0; i < m; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(m);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * static_cast<double>(i);
        Point p(3);
        p << rho * std::cos(phi), rho * std::sin(phi), z;
        half.push_back(p);
      }
    } else {
      for (int i = 0; i < n; ++i) half.push_back(Direction::axis(n, i).vector());
      PortableGaussian gauss(seed);
      while (half.size() < m) {
        Point p(n);
        for (int j = 0; j < n; ++j) p(j) = gauss();
        const double norm = p.norm();
        if (norm > 1e-8) half.push_back(p / norm);
      }
    }
  }
  grid.nodes_ = half;
  for (const auto& p : half) grid.nodes_.push_back(-p);
  const double w = (n == 1 ? 2.0 : sphere_surface(n)) / static_cast<double>(grid.nodes_.size());
  grid.weights_.assign(grid.nodes_.size(), w);
  return grid;
}

double SphereGrid::spacing() const {
  if (n_ <= 1) return kPi;
  const double area = sphere_surface(n_) / static_cast<double>(nodes_.size());
  return std::pow(area, 1.0 / (n_ - 1));
}

// ---------------------------------------------------------------- operations

double radial_metric(const StarBody& K, const StarBody& L, const SphereGrid& grid) {
  require_same_dimension(K.dimension(), L.dimension());
  require_same_dimension(K.dimension(), grid.dimension());
  double best = 0.0;
  for (const auto& node : grid.nodes()) {
    const Direction theta(node);
    best = std::max(best, std::abs(K.radial(theta) - L.radial(theta)));
  }
  return best;
}

double volume_polar(const StarBody& K, const SphereGrid& grid) {
  require_same_dimension(K.dimension(), grid.dimension());
  const int n = K.dimension();
  std::vector<double> terms(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    terms[i] = grid.weights()[i] * std::pow(K.minkowski(grid.nodes()[i]), -n);
  }
  return pairwise_sum(terms) / n;
}

double body_volume(const StarBody& K, const SphereGrid& grid) {
  if (auto v = K.closed_form_volume()) return *v;
  return volume_polar(K, grid);
}

StarBody scale_to_volume_one(const StarBody& K, const SphereGrid& grid) {
  const int n = K.dimension();
  const double volume = body_volume(K, grid);
  const double factor = std::pow(volume, -1.0 / n);
  return std::visit(
      Overloaded{
          [&](const body::Ball& b) { return StarBody::ball(n, b.radius * factor); },
          [&](const body::Ellipsoid& e) {
            return StarBody::ellipsoid(Eigen::VectorXd(e.semi_axes * factor), e.axes);
          },
          [&](const body::LpBall& l) { return StarBody::lp_ball(n, l.p, l.scale * factor); },
          [&](const body::RadialQSum&) { return factor == 1.0 ? K : StarBody::scaled(K, factor); },
          [&](const body::Scaled& s) { return StarBody::scaled(*s.base, s.factor * factor); },
      },
      K.kind());
}

StarBody scale_to_volume_one(const StarBody& K) {
  if (K.closed_form_volume()) return scale_to_volume_one(K, SphereGrid::make(K.dimension(), 4));
  return scale_to_volume_one(K, SphereGrid::make(K.dimension(), 20000));
}

Containment contains(const StarBody& D, const StarBody& K, const SphereGrid& grid) {
  require_same_dimension(D.dimension(), K.dimension());
  require_same_dimension(D.dimension(), grid.dimension());
  Containment out{true, std::numeric_limits<double>::infinity()};
  for (const auto& node : grid.nodes()) {
    const Direction theta(node);
    const double rk = K.radial(theta);
    const double rd = D.radial(theta);
    out.margin = std::min(out.margin, rd / rk);
    if (rk > rd * (1.0 + 1e-10)) out.contained = false;
  }
  return out;
}

EnclosingEllipsoid enclosing_ellipsoid_dovr(const StarBody& K, std::size_t boundary_samples, std::uint64_t seed) {
  const int n = K.dimension();
  const SphereGrid grid = SphereGrid::make(n, boundary_samples, seed);
  std::vector<Point> samples;
  for (std::size_t i = 0; i < grid.half_size(); ++i) {
    const Direction theta = grid.direction(i);
    samples.push_back(K.radial(theta) * theta.vector());
    if (auto x = K.support_point(theta)) samples.push_back(*x);
  }
  const auto m = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd P(n, m);
  for (Eigen::Index i = 0; i < m; ++i) P.col(i) = samples[static_cast<std::size_t>(i)];
  {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(P * P.transpose());
    if (lu.rank() < n) throw DomainError("degenerate boundary sample set");
  }

  constexpr double kTol = 1e-8;
  constexpr std::size_t kMaxIterations = 200000;
  Eigen::VectorXd u = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
  Eigen::MatrixXd Xinv;
  std::size_t iteration = 0;
  for (; iteration < kMaxIterations; ++iteration) {
    const Eigen::MatrixXd X = P * u.asDiagonal() * P.transpose();
    Xinv = X.inverse();
    const Eigen::VectorXd g = (P.transpose() * Xinv).cwiseProduct(P.transpose()).rowwise().sum();
    Eigen::Index j = 0;
    const double gmax = g.maxCoeff(&j);
    if (gmax <= n * (1.0 + kTol)) break;
    Eigen::Index k = -1;
    double gmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (u(i) > 0.0 && g(i) < gmin) {
        gmin = g(i);
        k = i;
      }
    }
    if (gmax - n >= n - gmin || k < 0) {
      const double tau = (gmax - n) / (n * (gmax - 1.0));
      u *= 1.0 - tau;
      u(j) += tau;
    } else {
      // away step, clipped so that u_k stays non-negative
      const double max_drop = u(k) / (1.0 - u(k));
      double tau = gmin > 1.0 ? (n - gmin) / (n * (gmin - 1.0)) : max_drop;
      tau = std::min(tau, max_drop);
      u *= 1.0 + tau;
      u(k) -= tau;
      if (u(k) < 0.0) u(k) = 0.0;
    }
  }

  Eigen::MatrixXd A = Xinv / n;
  // Inflate to contain every sample and a denser, independent check grid.
  double worst = (P.transpose() * A).cwiseProduct(P.transpose()).rowwise().sum().maxCoeff();
  const SphereGrid check = SphereGrid::make(n, 2 * boundary_samples, seed + 1);
  for (std::size_t i = 0; i < check.half_size(); ++i) {
    const Direction theta = check.direction(i);
    const Point x = K.radial(theta) * theta.vector();
    worst = std::max(worst, x.dot(A * x));
    if (auto s = K.support_point(theta)) worst = std::max(worst, s->dot(A * *s));
  }
  const double inflation = std::sqrt(std::max(1.0, worst));
  A /= inflation * inflation;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(A);
  const Eigen::VectorXd semi = eig.eigenvalues().cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd axes = eig.eigenvectors();
  if (axes.determinant() < 0.0) axes.col(0) = -axes.col(0);
  StarBody E = StarBody::ellipsoid(semi, axes);
  const double volume_e = ball_volume(n) * semi.prod();
  const double volume_k = body_volume(K, SphereGrid::make(n, 20000, seed));
  return EnclosingEllipsoid{E, std::pow(volume_e / volume_k, 1.0 / n), iteration, inflation};
}

}  // namespace radonfd
