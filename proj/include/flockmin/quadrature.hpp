#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace flockmin {

/// Controls for the singular quadratures used throughout the library.
/// nodes_per_cell is the Gauss-Legendre order per panel, and
/// diagonal_refinement_levels bounds the geometric (dyadic) subdivision
/// depth toward singular endpoints and the kernel diagonal r = s.
struct QuadratureSpec {
  int nodes_per_cell = 16;
  int diagonal_refinement_levels = 48;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;

  void validate() const;
};

namespace quad {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

/// Gauss-Legendre rule of order n, cached after first use.
const GaussRule& gauss_legendre(int n);

/// Plain Gauss-Legendre integral of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, int n);

/// Panels of geometrically shrinking width accumulating toward `end`.
/// The open gap [end - 2^-levels * (end-start), end] is left to the caller,
/// which typically closes it analytically.
std::vector<std::pair<double, double>> geometric_panels(double start, double end, int levels);

/// Sum of Gauss-Legendre integrals over a panel list.
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<std::pair<double, double>>& panels, int n);

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive bisection with an n vs 2n Gauss-Legendre error estimate.
/// Throws quadrature_failure if the tolerance cannot be met.
Estimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                            const QuadratureSpec& spec);

}  // namespace quad
}  // namespace flockmin
