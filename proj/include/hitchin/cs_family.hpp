#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hitchin/hitchin_system.hpp"
#include "hitchin/hk_geometry.hpp"

namespace hitchin {

// Complexified connection; the two coefficients are independent.
struct ComplexConnection {
  MatrixField b_z;
  MatrixField b_zbar;
};

// B_lambda = A + lambda Phi^{1,0} + (1/lambda) Phi^{1,0*}, |lambda| = 1:
//   b_z = -a_zbar^* + lambda phi_z,  b_zbar = a_zbar + (1/lambda) phi_z^*.
ComplexConnection b_lambda(const Configuration& c, cplx lambda);

// dz^dzbar coefficient of F(B_lambda) = d_z b_zbar - d_zbar b_z + [b_z, b_zbar].
// Exact Laurent structure: r1 - lambda r2 + (1/lambda) r2^* per site.
MatrixField flatness(const Configuration& c, cplx lambda);

struct LambdaScanReport {
  int K = 0;
  std::vector<cplx> lambdas;
  std::vector<double> flatness_norms;           // weighted L2 per lambda
  std::vector<double> decomposition_residuals;  // max per-site Frobenius per lambda
};

// Scan over the K-th roots of unity, lambda_k = exp(2 pi i k / K).
LambdaScanReport flatness_scan(const Configuration& c, int K);

// Lift of a tangent vector into the B_lambda family:
//   z slot -alpha_zbar^* + lambda gamma_z, zbar slot alpha_zbar + (1/lambda) gamma_z^*.
FormPair tilde_lift(const TangentVector& x, cplx lambda);

// (omega1, omega2, omega3); omega1 delegates to the symplectic form Omega.
std::array<cplx, 3> omega123(const TangentVector& x, const TangentVector& y);

// F_lambda(X, Y) = (i/2pi) Int Tr(lift(X) ^ lift(Y)), computed directly from
// the lifts; the Laurent decomposition in the omegas is a test, not the route.
cplx f_lambda(const TangentVector& x, const TangentVector& y, cplx lambda);

// f(i) + f(-i); equals (i/pi) Omega.
cplx tau_curvature(const TangentVector& x, const TangentVector& y);

// (2 f(i) - tau, 2 f(1) - tau); equal (1/pi) Q1 and (1/pi) Q2.
std::pair<cplx, cplx> trivial_bundle_curvatures(const TangentVector& x, const TangentVector& y);

// Coefficients (c0, c_plus, c_minus) of c0 + c_plus l + c_minus / l through
// three distinct unit-modulus points.
std::array<cplx, 3> laurent_fit(const std::array<cplx, 3>& lambdas, const std::array<cplx, 3>& values);

}  // namespace hitchin
