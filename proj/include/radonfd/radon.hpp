#pragma once

// Radon transforms of densities over hyperplane sections, parallel section
// functions and their normalized fractional derivatives at 0.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "radonfd/bodies.hpp"
#include "radonfd/fracderiv.hpp"
#include "radonfd/special.hpp"

namespace radonfd {

enum class DensityKind { Uniform, GaussianRestricted, PolynomialEven, Custom };

/// Non-negative function on a body. Integration never leaves the body, so the
/// indicator 1_K is implicit.
struct Density {
  DensityKind kind = DensityKind::Uniform;
  double sigma = 1.0;            // GaussianRestricted: exp(-|x|^2 / 2σ^2)
  std::vector<double> coeffs;    // PolynomialEven: Σ a_j |x|^{2j}
  double normalization = 1.0;    // overall factor c
  bool even = true;
  std::function<double(const Point&)> custom;
  std::string label;             // Custom only

  static Density uniform(double c = 1.0);
  static Density gaussian(double sigma, double c = 1.0);
  static Density polynomial_even(std::vector<double> coeffs, double c = 1.0);
  static Density from_function(std::function<double(const Point&)> f, bool even, std::string label);

  double operator()(const Point& x) const;
  bool is_uniform() const noexcept { return kind == DensityKind::Uniform; }
  /// f depends on |x| only.
  bool is_radial() const noexcept { return kind != DensityKind::Custom; }
  Density scaled(double factor) const;
  std::string spec() const;
};

/// "uniform", "uniform:c=0.5", "gaussian:sigma=1", "poly:a=1,0.5". A trailing
/// ",normalized" is not handled here; see normalized_on().
Density parse_density(std::string_view spec);

/// Every grid size, tolerance and seed of the numeric pipeline.
struct QuadratureSpec {
  std::size_t direction_grid = 500;   // nodes on S^{n-1} for direction sweeps
  std::size_t section_grid = 128;     // nodes on S^{n-2} inside a section, n >= 4
  double section_tol = 1e-12;         // relative, adaptive angle integral of n = 3 sections
  std::size_t radial_nodes = 12;      // Gauss-Jacobi nodes per ray (non-uniform densities)
  std::size_t volume_grid = 20000;    // nodes on S^{n-1} for polar volumes and moments
  double singular_tol = 1e-10;        // absolute tolerance of the fractional integrals
  double bisection_tol = 1e-12;       // relative, boundary search along rays
  int refine_rounds = 3;
  bool use_analytic_oracles = true;
  std::uint64_t seed = 0;

  FracDerivOptions frac_options() const;
  void validate() const;
};

/// c so that ∫_K c f = 1 (c multiplies the existing normalization).
Density normalized_on(const Density& f, const StarBody& K, const QuadratureSpec& quad);

/// Orthonormal basis of ξ^⊥ (columns), from the Householder reflection that
/// maps e_1 to ±ξ.
Eigen::MatrixXd orthogonal_complement(const Direction& xi);

/// Rf(ξ, t) = ∫_{K ∩ {(x,ξ)=t}} f.
double section_integral(const StarBody& K, const Density& f, const Direction& xi, double t,
                        const QuadratureSpec& quad = {});

/// t ↦ Rf(ξ, t) on [0, h_K(ξ)], with the binomial-series oracle attached for
/// ellipsoids with uniform densities.
SectionFunction parallel_section_function(const StarBody& K, const Direction& xi, const Density& f,
                                          const QuadratureSpec& quad = {});

struct FracRadonResult {
  Point direction;
  double normalized = 0.0;  // (1/cos(πq/2)) (Rf(ξ,·))^{(q)}(0)
  double raw = 0.0;
  double estimated_error = 0.0;  // on the normalized value
  FracDerivResult detail;
};

FracRadonResult frac_radon_at_zero(const StarBody& K, const Density& f, const Direction& xi,
                                   const FractionalOrder& q, const QuadratureSpec& quad = {});

/// Normalized values on every node of `grid` (only the first half when f is
/// even: antipodal nodes carry the same value).
std::vector<FracRadonResult> frac_radon_on_grid(const StarBody& K, const Density& f, const FractionalOrder& q,
                                                const SphereGrid& grid, const QuadratureSpec& quad = {});

struct DirectionMax {
  Point direction;
  double value = 0.0;       // after refinement
  double raw = 0.0;
  double grid_value = 0.0;  // best grid node
  double grid_mean = 0.0;
  double grid_min = 0.0;
  std::size_t grid_index = 0;
  std::size_t grid_size = 0;
  std::size_t evaluations = 0;
  double estimated_error = 0.0;
  /// Polytopes at q >= 1: the supremum is +inf (kinks at vertex directions),
  /// so refinement is skipped and `value` is the grid maximum.
  bool unbounded = false;
};

/// Maximizes the normalized derivative over S^{n-1}: grid sweep, then
/// golden-section refinement along tangent coordinates around the best node.
DirectionMax max_over_directions(const StarBody& K, const Density& f, const FractionalOrder& q,
                                 const QuadratureSpec& quad = {});

/// ∫_K ‖x‖_D^{-p} f(x) dx by polar quadrature; p < n.
double moment_integral(const StarBody& D, const StarBody& K, const Density& f, double p,
                       const QuadratureSpec& quad = {});

/// ∫_K f.
double body_integral(const StarBody& K, const Density& f, const QuadratureSpec& quad = {});

}  // namespace radonfd
