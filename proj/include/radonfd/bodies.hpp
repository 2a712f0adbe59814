#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace radonfd {

using Point = Eigen::VectorXd;

/// Unit vector in R^n.
class Direction {
 public:
  /// Throws DomainError unless | |v| - 1 | <= 1e-12.
  explicit Direction(Point v);
  /// Normalizes v; throws DomainError for the zero vector.
  static Direction normalized(const Point& v);
  static Direction axis(int n, int i);

  const Point& vector() const noexcept { return v_; }
  int dimension() const noexcept { return static_cast<int>(v_.size()); }
  Direction operator-() const { return Direction(Point(-v_)); }

 private:
  Point v_;
};

struct Polytope {
  std::vector<Eigen::VectorXd> vertices;
  std::vector<std::pair<int, int>> edges;
};

class StarBody;
using BodyPtr = std::shared_ptr<const StarBody>;

namespace body {
struct Ball {
  double radius;
};
/// M B_2^n with M = axes * diag(semi_axes); axes orthonormal.
struct Ellipsoid {
  Eigen::VectorXd semi_axes;
  Eigen::MatrixXd axes;
  bool axis_aligned;
};
/// scale * B_p^n; p = +inf is the cube [-scale, scale]^n.
struct LpBall {
  double p;
  double scale;
};
/// Radial q-sum: r^q = Σ r_i^q.
struct RadialQSum {
  std::vector<BodyPtr> components;
  double q;
};
struct Scaled {
  BodyPtr base;
  double factor;
};
}  // namespace body

/// Origin-symmetric star body given by its Minkowski functional. Immutable.
class StarBody {
 public:
  using Kind = std::variant<body::Ball, body::Ellipsoid, body::LpBall, body::RadialQSum, body::Scaled>;

  static StarBody ball(int n, double radius = 1.0);
  static StarBody ellipsoid(const Eigen::VectorXd& semi_axes);
  static StarBody ellipsoid(const Eigen::VectorXd& semi_axes, const Eigen::MatrixXd& axes);
  static StarBody lp_ball(int n, double p, double scale = 1.0);
  static StarBody cube(int n, double half_width = 1.0);
  static StarBody scaled(const StarBody& base, double factor);

  int dimension() const noexcept { return n_; }
  const Kind& kind() const noexcept { return kind_; }

  /// ‖x‖_K
  double minkowski(const Point& x) const;
  /// r_K(θ) = 1/‖θ‖_K
  double radial(const Direction& theta) const;
  /// Largest radial value over the sphere (exact or an upper bound).
  double outer_radius() const;
  /// h_K(ξ) = max_{x∈K} (x, ξ); empty for kinds without a closed form.
  std::optional<double> support(const Direction& xi) const;
  /// A point x* ∈ ∂K with (x*, ξ) = h_K(ξ).
  std::optional<Point> support_point(const Direction& xi) const;
  /// max{s >= 0 : ‖p + sθ‖_K <= 1} for p in the interior of K. Closed form
  /// for balls, ellipsoids, ℓ_1 balls and cubes; bisection to 1e-12 relative otherwise.
  double ray_exit(const Point& p, const Point& theta) const;
  std::optional<double> closed_form_volume() const;

  /// Textual form accepted by parse_body, e.g. "ellipsoid:a=2,1,1".
  std::string spec() const;

  bool is_ball() const;
  /// Ball or ellipsoid up to scaling (admits analytic section/Fourier formulas).
  bool is_ellipsoidal() const;
  /// The matrix M with K = M B_2^n, when is_ellipsoidal().
  std::optional<Eigen::MatrixXd> ellipsoid_matrix() const;
  /// Vertices and edges for ℓ_1 balls and cubes (sections of these bodies
  /// have corners where the hyperplane passes a vertex).
  std::optional<Polytope> polytope() const;

 private:
  StarBody(int n, Kind kind) : n_(n), kind_(std::move(kind)) {}
  friend StarBody radial_q_sum(const StarBody&, const StarBody&, double);

  int n_;
  Kind kind_;
};

StarBody radial_q_sum(const StarBody& K, const StarBody& L, double q);

/// Parses "ball:r=1", "ellipsoid:a=2,1,1", "lp:p=1,scale=1", "cube",
/// "qsum:q=2;ball:r=1;ellipsoid:a=2,1". Dimension n is used where the spec
/// does not fix it; a mismatch is a DomainError.
StarBody parse_body(std::string_view spec, int n);

/// Symmetric discretization of S^{n-1}: nodes [0, half) and [half, size) are
/// antipodal pairs; equal weights summing to |S^{n-1}|.
class SphereGrid {
 public:
  /// n = 1: {±1}; n = 2: uniform angles; n = 3: Fibonacci lattice (the
  /// antipodes make up the second half); n >= 4: coordinate axes plus seeded
  /// normalized Gaussian points.
  static SphereGrid make(int n, std::size_t approx_size, std::uint64_t seed = 0);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t half_size() const noexcept { return nodes_.size() / 2; }
  const std::vector<Point>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  Direction direction(std::size_t i) const { return Direction(nodes_[i]); }
  /// Typical angular spacing between neighbouring nodes.
  double spacing() const;

 private:
  int n_ = 0;
  std::vector<Point> nodes_;
  std::vector<double> weights_;
};

double radial_metric(const StarBody& K, const StarBody& L, const SphereGrid& grid);
double volume_polar(const StarBody& K, const SphereGrid& grid);

/// Closed-form volume when available, else volume_polar on `grid`.
double body_volume(const StarBody& K, const SphereGrid& grid);

/// Scaled copy of volume 1 (closed-form scaling for balls, ellipsoids and
/// ℓ_p balls; polar quadrature on `grid` otherwise).
StarBody scale_to_volume_one(const StarBody& K, const SphereGrid& grid);
StarBody scale_to_volume_one(const StarBody& K);

struct Containment {
  bool contained;
  double margin;  // min over nodes of r_D / r_K
};

/// K ⊂ D checked on grid nodes with multiplicative slack 1e-10.
Containment contains(const StarBody& D, const StarBody& K, const SphereGrid& grid);

struct EnclosingEllipsoid {
  StarBody ellipsoid;
  double volume_ratio;  // (|E| / |K|)^{1/n}
  std::size_t iterations;
  double inflation;  // factor applied to reach containment
};

/// Minimal-volume origin-centred ellipsoid around sampled boundary points of K
/// (Khachiyan iteration with away steps, tolerance 1e-8), inflated to contain
/// the samples and a denser check grid.
EnclosingEllipsoid enclosing_ellipsoid_dovr(const StarBody& K, std::size_t boundary_samples,
                                            std::uint64_t seed = 0);

}  // namespace radonfd
