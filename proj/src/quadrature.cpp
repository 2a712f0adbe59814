#include "radonfd/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "radonfd/errors.hpp"
#include "radonfd/special.hpp"

namespace radonfd {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

// Kronrod 15-point abscissae (positive half) and weights; Gauss 7-point weights.
constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const {
    if (error != other.error) return error < other.error;
    return a > other.a;  // deterministic tie-break
  }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  double err = std::abs((kronrod - gauss) * half);
  // QUADPACK-style error scaling, kept conservative.
  err = std::max(err, 50.0 * std::numeric_limits<double>::epsilon() * std::abs(value));
  return {a, b, value, err};
}

}  // namespace

IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     const AdaptiveOptions& options) {
  IntegrationResult result;
  if (a == b) return result;
  std::priority_queue<Panel> queue;
  Panel first = gk15(f, a, b);
  queue.push(first);
  result.evaluations = 15;
  double total = first.value;
  double total_err = first.error;
  auto within = [&] {
    return total_err <= std::max(options.abs_tol, options.rel_tol * std::abs(total));
  };
  while (!within() && queue.size() < options.max_intervals) {
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted
    queue.pop();
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  // Re-sum in interval order so the value does not carry the update history.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<double> values, errors;
  for (const auto& p : panels) {
    values.push_back(p.value);
    errors.push_back(p.error);
  }
  result.value = pairwise_sum(values);
  result.error = pairwise_sum(errors);
  result.intervals = panels.size();
  result.converged = result.error <= std::max(options.abs_tol, options.rel_tol * std::abs(result.value));
  return result;
}

QuadratureRule gauss_jacobi(std::size_t n, double alpha, double beta) {
  if (n == 0) throw DomainError("gauss_jacobi requires at least one node");
  if (!(alpha > -1.0 && beta > -1.0)) throw DomainError("gauss_jacobi requires alpha, beta > -1");
  // Golub–Welsch on the symmetric Jacobi matrix of the monic recurrence.
  Eigen::VectorXd diag(n), off(n > 1 ? n - 1 : 1);
  const double ab = alpha + beta;
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double s = 2.0 * static_cast<double>(k) + ab;
    diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    const double num = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    off(k - 1) = std::sqrt(num / den);
  }
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < n; ++k) J(k, k) = diag(k);
  for (std::size_t k = 0; k + 1 < n; ++k) J(k, k + 1) = J(k + 1, k) = off(k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
  const double log_mu0 = (ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
                         log_gamma(ab + 2.0);
  const double mu0 = std::exp(log_mu0);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    rule.nodes[k] = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[k] = mu0 * v0 * v0;
  }
  return rule;
}

RadialRule::RadialRule(std::size_t n, double power) : power_(power) {
  if (!(power > -1.0)) throw DomainError("radial rule requires power > -1");
  QuadratureRule rule = gauss_jacobi(n, 0.0, power);
  unit_nodes_.resize(n);
  unit_weights_.resize(n);
  // x in [-1,1] -> s = (1+x)/2; (1+x)^power dx = 2^{power+1} s^power ds
  const double scale = std::pow(0.5, power + 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    unit_nodes_[i] = 0.5 * (1.0 + rule.nodes[i]);
    unit_weights_[i] = rule.weights[i] * scale;
  }
}

}  // namespace radonfd
