#include "flockmin/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "flockmin/errors.hpp"

namespace flockmin {

void QuadratureSpec::validate() const {
  if (nodes_per_cell < 1) throw std::invalid_argument("QuadratureSpec: nodes_per_cell must be >= 1");
  if (diagonal_refinement_levels < 0)
    throw std::invalid_argument("QuadratureSpec: diagonal_refinement_levels must be >= 0");
  if (abs_tol <= 0.0 || rel_tol <= 0.0)
    throw std::invalid_argument("QuadratureSpec: tolerances must be positive");
}

namespace quad {

namespace {

// Newton iteration on the Legendre recurrence; nodes are symmetric so only
// the upper half is solved.
GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

std::vector<std::pair<double, double>> geometric_panels(double start, double end, int levels) {
  std::vector<std::pair<double, double>> panels;
  panels.reserve(levels);
  double span = end - start;
  // panel j covers the dyadic band at distance span*2^-(j+1) .. span*2^-j from `end`
  for (int j = 0; j < levels; ++j) {
    double outer = end - span * std::ldexp(1.0, -j);
    double inner = end - span * std::ldexp(1.0, -(j + 1));
    panels.emplace_back(outer, inner);
  }
  return panels;
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<std::pair<double, double>>& panels, int n) {
  double sum = 0.0;
  for (const auto& [a, b] : panels) sum += integrate(f, a, b, n);
  return sum;
}

namespace {

void adapt(const std::function<double(double)>& f, double a, double b, double whole, int n,
           double tol, int depth, Estimate& out) {
  double mid = 0.5 * (a + b);
  double left = integrate(f, a, mid, n);
  double right = integrate(f, mid, b, n);
  double err = std::abs(left + right - whole);
  if (err <= tol || depth <= 0) {
    out.value += left + right;
    out.error += err;
    return;
  }
  adapt(f, a, mid, left, n, 0.5 * tol, depth - 1, out);
  adapt(f, mid, b, right, n, 0.5 * tol, depth - 1, out);
}

}  // namespace

Estimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                            const QuadratureSpec& spec) {
  spec.validate();
  const int n = std::max(spec.nodes_per_cell, 4);
  Estimate result;
  double whole = integrate(f, a, b, n);
  double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(whole));
  adapt(f, a, b, whole, n, tol, spec.diagonal_refinement_levels, result);
  double goal = std::max(spec.abs_tol, spec.rel_tol * std::abs(result.value));
  if (result.error > 10.0 * goal)
    throw quadrature_failure("integrate_adaptive: tolerance not met", result.error);
  return result;
}

}  // namespace quad
}  // namespace flockmin
