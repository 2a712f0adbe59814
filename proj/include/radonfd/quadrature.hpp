#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace radonfd {

/// Fixed-order pairwise summation. Results depend only on the order of the
/// input, never on how the values were produced.
double pairwise_sum(std::span<const double> values);

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  std::size_t evaluations = 0;
  std::size_t intervals = 0;
  bool converged = true;
};

struct AdaptiveOptions {
  double abs_tol = 1e-11;
  double rel_tol = 0.0;
  std::size_t max_intervals = 2000;
};

/// Globally adaptive 7/15-point Gauss–Kronrod integration over [a, b].
/// Deterministic: the bisection order depends only on the integrand values.
IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     const AdaptiveOptions& options = {});

/// Nodes/weights on [-1, 1] for the weight (1-x)^alpha (1+x)^beta, alpha, beta > -1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_jacobi(std::size_t n, double alpha, double beta);
inline QuadratureRule gauss_legendre(std::size_t n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Rule for ∫_0^r s^power g(s) ds = r^{power+1} Σ w_i g(r x_i), with x_i in (0, 1).
class RadialRule {
 public:
  RadialRule(std::size_t n, double power);

  double power() const noexcept { return power_; }
  std::size_t size() const noexcept { return unit_nodes_.size(); }
  std::span<const double> unit_nodes() const noexcept { return unit_nodes_; }
  std::span<const double> unit_weights() const noexcept { return unit_weights_; }

  template <class F>
  double integrate(double r, F&& g) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < unit_nodes_.size(); ++i) sum += unit_weights_[i] * g(r * unit_nodes_[i]);
    return std::pow(r, power_ + 1.0) * sum;
  }

 private:
  double power_;
  std::vector<double> unit_nodes_;
  std::vector<double> unit_weights_;
};

}  // namespace radonfd
