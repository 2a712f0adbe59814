#pragma once

// Checkers for the identities and inequalities around the slicing problem.
// Every checker returns an InequalityReport with both sides, the margin, the
// tolerance used and the provenance of every constant.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radonfd/bodies.hpp"
#include "radonfd/radon.hpp"
#include "radonfd/special.hpp"

namespace radonfd {

enum class ReportStatus { Pass, Fail, Inapplicable };
std::string_view to_string(ReportStatus status);

struct ConstantRecord {
  std::string name;
  double value = 0.0;
  std::string source;
};

struct InequalityReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> inputs;
  bool equality = false;  // equality checks compare relative_gap with tolerance
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double relative_gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool tight = false;
  ReportStatus status = ReportStatus::Fail;
  std::string dovr_source;
  std::vector<ConstantRecord> constants;
  std::vector<std::pair<std::string, double>> diagnostics;
  std::vector<std::pair<std::string, std::string>> applicability;

  void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  void constant(std::string name, double value, std::string source) {
    constants.push_back({std::move(name), value, std::move(source)});
  }
  void diagnostic(std::string key, double value) { diagnostics.emplace_back(std::move(key), value); }
  void flag(std::string key, std::string value) { applicability.emplace_back(std::move(key), std::move(value)); }
  std::optional<double> diagnostic_value(std::string_view key) const;
  std::optional<std::string> input_value(std::string_view key) const;
};

enum class DovrSource { IntersectionBody, Unconditional, LpSubspace, Kpz, EnclosingEllipsoid, UserSupplied };
std::string_view to_string(DovrSource source);

/// Upper bound on the outer volume ratio distance; value >= 1.
struct DovrBound {
  double value = 1.0;
  DovrSource source = DovrSource::UserSupplied;

  static DovrBound user(double value);
};

struct DovrOptions {
  double c_lp = 1.0;                   // constant in c√p for ℓ_p balls, 2 < p < ∞
  std::size_t ellipsoid_samples = 2000;
  std::uint64_t seed = 0;
};

/// Default bound by body kind: ellipsoids and ℓ_p balls with p <= 2 -> 1,
/// cube -> e, ℓ_p with 2 < p < ∞ -> c_lp √p, otherwise a computed enclosing
/// ellipsoid.
DovrBound default_dovr(const StarBody& K, const DovrOptions& options = {});

/// Pass rule for inequalities: margin >= -tolerance with
/// tolerance = max(10 × estimated error, floor).
void finalize_inequality(InequalityReport& report, double estimated_error, double floor);
/// Pass rule for equalities: relative_gap <= tolerance.
void finalize_equality(InequalityReport& report, double tolerance);

struct Corollary1Tolerances {
  double one_dimensional = 1e-6;
  double fourier = 1e-12;
  double pipeline = 1e-3;
};

/// The ball value computed four ways: closed form, fractional derivative of
/// the analytic section function, the Fourier-constant route, and the full
/// numeric section pipeline (no analytic oracle).
InequalityReport check_corollary1(int n, const FractionalOrder& q, const QuadratureSpec& quad = {},
                                  const Corollary1Tolerances& tol = {});

/// Spherical Parseval identity for K = M B_2^n, 0 < p < n.
InequalityReport check_parseval(const StarBody& K, double p, const SphereGrid& grid, double tolerance);

/// ∫_D ‖x‖_D^{-1-q} dx = n |D| / (n - q - 1).
InequalityReport check_mp_moment_identity(const StarBody& D, const FractionalOrder& q, const QuadratureSpec& quad = {},
                                          double tolerance = 1e-3);

/// (∫_L ‖x‖_D^{-1-q} g / ∫_D ‖x‖_D^{-1-q})^{1/(n-q-1)} <= (∫_L g / |D|)^{1/n}
/// for g with ‖g‖_∞ = g(0) = 1.
InequalityReport check_mp_lemma(const StarBody& L, const Density& g, const StarBody& D, const FractionalOrder& q,
                                const QuadratureSpec& quad = {});

/// ∫_{S^{n-1}} ‖θ‖_D^{-1-q} <= |S^{n-1}|^{(n-q-1)/n} n^{(q+1)/n} |D|^{(q+1)/n}.
InequalityReport check_holder_step(const StarBody& D, const FractionalOrder& q, const SphereGrid& grid);

InequalityReport check_theorem2(const StarBody& K, const Density& f, const FractionalOrder& q, const DovrBound& dovr,
                                const QuadratureSpec& quad = {});

InequalityReport check_theorem3(const StarBody& K, const Density& f, const StarBody& L, const Density& g,
                                const FractionalOrder& q, const DovrBound& dovr, const QuadratureSpec& quad = {},
                                std::size_t hypothesis_directions = 200);

struct Theorem1Options {
  double c = 1.0;      // the absolute constant (unspecified; caller value)
  double C_kpz = 1.0;  // constant of the d_ovr bound in the route through thm2
};

/// Lower bound on max_ξ of the normalized derivative for a volume-one body
/// and a probability density, 0 <= q <= n-2. Odd q must be a
/// continuous_limit order.
InequalityReport check_theorem1(const StarBody& K, const Density& f, const FractionalOrder& q,
                                const Theorem1Options& options = {}, const QuadratureSpec& quad = {});

/// Largest c for which the thm1 lower bound holds given max value `value`.
double theorem1_implied_constant(int n, double q, double value);

}  // namespace radonfd
