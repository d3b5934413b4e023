#pragma once

#include "flockmin/quadrature.hpp"

namespace flockmin {

/// Parameters of the attractive-repulsive power kernel |x|^alpha + |x|^-lambda
/// in dimension dim. The energy-friendly regime is lambda < dim - 1; for
/// lambda in [dim-1, dim) the ball potential has an unbounded derivative at
/// the surface and balls cannot be critical points.
struct KernelParams {
  int dim = 3;
  double alpha = 2.0;
  double lambda = 1.0;

  bool energy_regime() const { return lambda < dim - 1; }
  void validate() const;
};

double unit_sphere_area(int dim);             // |S^{dim-1}|
double ball_volume(int dim, double radius);
double ball_radius(int dim, double volume);

/// Integral of |r e - s w|^mu over the unit sphere in w (e a fixed unit
/// vector). Symmetric in (r, s). Closed form in dimensions 1 and 3, singular
/// quadrature otherwise. Throws divergent_integral when r = s and
/// mu <= -(dim-1).
double sphere_kernel(double mu, double r, double s, int dim, const QuadratureSpec& spec = {});

/// Same t-integral evaluated by generic quadrature in every dimension,
/// bypassing the closed forms. Used to cross-check them.
double sphere_kernel_quadrature(double mu, double r, double s, int dim,
                                const QuadratureSpec& spec = {});

/// Potential of the unit ball, phi_mu(r) = int_{B_1} |x-y|^mu dy at |x| = r.
/// Requires mu > -dim.
double ball_potential(double mu, double r, int dim, const QuadratureSpec& spec = {});

/// phi_mu(1 + delta) - phi_mu(1), evaluated accurately for |delta| far below
/// machine epsilon relative to 1 (dimension 3 only). The singular part in
/// |delta| is kept in closed form; the analytic part uses expm1/log1p.
double ball_potential_surface_diff(double mu, double delta, int dim,
                                   const QuadratureSpec& spec = {});

struct RadialDerivative {
  double value = 0.0;
  bool divergent = false;  // |r-1| within the divergence window and mu <= -(dim-1)
  int blow_up_sign = 0;    // sign of the derivative blow-up when divergent
};

/// Radial derivative of the unit-ball potential, computed from the surface
/// integral form. For mu <= -(dim-1) the derivative blows up at r = 1 and a
/// signed divergence flag is reported inside a window of 1e-6 around the
/// surface instead of a number.
RadialDerivative ball_potential_derivative(double mu, double r, int dim,
                                           const QuadratureSpec& spec = {});

/// Potential of the ball of radius R for the combined kernel:
/// Phi(r) = R^{dim+alpha} ( phi_alpha(r/R) + R^{-alpha-lambda} phi_{-lambda}(r/R) ).
double combined_ball_potential(const KernelParams& params, double R, double r,
                               const QuadratureSpec& spec = {});

/// Phi(R(1+delta)) - Phi(R) with delta-accurate surface differences.
double combined_surface_diff(const KernelParams& params, double R, double delta,
                             const QuadratureSpec& spec = {});

/// Fraction of the sphere of radius ell, centered at distance a from the
/// origin, that lies inside the ball of radius R centered at the origin.
/// Reduces the dim-dimensional overlap geometry to a 1-D integrand via the
/// regularized incomplete beta function.
double sphere_cap_fraction(int dim, double ell, double a, double R);

}  // namespace flockmin
