#pragma once

#include <array>
#include <map>
#include <string>

#include "hitchin/calculus.hpp"

namespace hitchin {

// Tangent-space package: the L2 metric, the complex structures I, J, K,
// the symplectic forms Omega, Q1, Q2, their potentials theta1/theta2, and
// the rescaled curvature values. Everything is evaluated on the
// configuration space; gauge invariance stands in for descent.

// 2 Im Int Tr(alpha^{0,1} ^ beta^{0,1}*) - 2 Im Int Tr(gamma^{1,0} ^ delta^{1,0}*),
// where (.)* conjugate-transposes the matrix and swaps dz <-> dzbar.
double metric_g(const TangentVector& x, const TangentVector& y);

// sqrt(g(x, x)); the natural magnitude for identity residuals.
double tangent_norm(const TangentVector& x);

// The same metric along its two other published routes; kept separate so the
// equivalence chain is a real cross-check, not a tautology.
double metric_g_hitchin(const TangentVector& x);                       // 2i Tr(a* ^ a) + 2i Tr(g ^ g*)
double metric_g_star_route(const TangentVector& x, const TangentVector& y);  // -Tr(a ^ *1 b) - 2 Im Tr(g ^ *2 d^tr)

// Complex structures in stored components (alpha_zbar, gamma_z):
//   I: (i a, i g)    J: (i g*, -i a*)    K: (-g*, a*)
TangentVector apply_I(const TangentVector& x);
TangentVector apply_J(const TangentVector& x);
TangentVector apply_K(const TangentVector& x);

// Raw complex integrals (real up to rounding); the double versions return
// the real part. The imaginary residue is reported, never discarded
// silently: make_bilinear_report records it.
cplx omega_complex(const TangentVector& x, const TangentVector& y);
cplx q1_complex_raw(const TangentVector& x, const TangentVector& y);
cplx q2_complex_raw(const TangentVector& x, const TangentVector& y);

double omega(const TangentVector& x, const TangentVector& y);
double q1(const TangentVector& x, const TangentVector& y);
double q2(const TangentVector& x, const TangentVector& y);

// Q(X,Y) = 2 Tr Int (delta^{1,0} ^ alpha^{0,1} - gamma^{1,0} ^ beta^{0,1}),
// evaluated from its own formula; Q = Q1 + i Q2 is a test, not the route.
cplx q_complex(const TangentVector& x, const TangentVector& y);

// Symplectic potentials at the point c.
double theta1(const Configuration& c, const TangentVector& x);
double theta2(const Configuration& c, const TangentVector& x);

enum class Theta { one, two };

struct DthetaResult {
  double analytic = 0.0;
  double fd = 0.0;
  double discrepancy = 0.0;
};

// d theta (X, Y) with constant vector fields on the affine space, evaluated
// both analytically (theta is linear in Phi) and by central differences.
DthetaResult dtheta(Theta which, const Configuration& c, const TangentVector& x,
                    const TangentVector& y);

// Dictionary rescalings: (omega_I, omega_J, omega_K) = (-Omega, Q2, -Q1)/2pi.
std::array<double, 3> kw_forms(const TangentVector& x, const TangentVector& y);

// ((i/pi) Omega, (i/pi) Q1, (i/pi) Q2); purely imaginary up to rounding.
std::array<cplx, 3> prequantum_curvatures(const TangentVector& x, const TangentVector& y);

// (omega1, omega2, omega3): omega1 = Omega, and
//   omega2 = Int Tr(alpha^{0,1} ^ delta^{1,0} + gamma^{1,0} ^ beta^{0,1})
//   omega3 = -Int Tr(alpha^{1,0} ^ delta^{0,1} + gamma^{0,1} ^ beta^{1,0})
std::array<cplx, 3> omega123_values(const TangentVector& x, const TangentVector& y);

struct BilinearReport {
  double g = 0.0;
  double omega = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  cplx q_complex;
  std::array<cplx, 3> omega123{};
  std::map<std::string, double> identity_residuals;
};

BilinearReport make_bilinear_report(const TangentVector& x, const TangentVector& y);

}  // namespace hitchin
