#pragma once

#include <array>
#include <functional>

#include "ale/poly.hpp"

namespace ale {

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0;
  double estimated_error = 0;  // |I_n - I_{n/2}| of the last doubling
  int nodes_used = 0;          // per axis
};

/// Tensor-product Gauss-Legendre over a box, nodes doubled from 8 per axis
/// until two successive estimates agree within tol. Throws NoConvergence at
/// the node cap (256 per axis).
QuadratureResult integrate_box3(const std::function<double(double, double, double)>& f,
                                const std::array<double, 3>& lo, const std::array<double, 3>& hi,
                                double tol);

/// Face integral over [-1,1]^3 of numerator / (1 + |y|^2)^m. The numerator
/// must have numeric coefficients in the variables x2, x3, x4 (the face
/// convention with axis x1 restricted); m in {2,3,4} covers the c and sigma
/// families plus the 1/r^4 sanity value.
QuadratureResult numeric_cube_integral(const Poly& numerator, int m, double tol);

/// Signed boundary flux sum_j over the faces x^j = +-rho of f(j, x) against
/// the coordinate 3-forms gamma_j.
QuadratureResult numeric_boundary_flux(
    const std::function<double(int, const std::array<double, 4>&)>& f, double rho, double tol);

/// Flux of d(1/r^2) through the boundary of [-rho,rho]^4; equals -4 pi^2 for
/// every rho.
QuadratureResult flux_identity_check(double rho, double tol);

/// The sphere-coordinate integrand
///   Q = sin^2 t1 sin t2 ( sin^4 t1 ( sin^4 t2 (cos 4 t3 + 3)/4 + cos^4 t2 )
///       + cos^4 t1 )
/// integrated over (0,pi) x (0,pi) x (0,2pi); equals pi^2.
QuadratureResult sphere_integral_Q(double tol);
double sphere_integrand_Q(double t1, double t2, double t3);

}  // namespace ale
