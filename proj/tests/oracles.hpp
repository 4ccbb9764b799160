#pragma once

// Independent oracles for the test suites: plain-loop direct summation and
// closed-form mode algebra, kept away from the library's integration and
// reduction paths on purpose.

#include <complex>
#include <numbers>
#include <vector>

#include "hitchin/hitchin_system.hpp"
#include "hitchin/hk_geometry.hpp"
#include "hitchin/types.hpp"

namespace oracle {

using hitchin::cplx;
using hitchin::Grid;
using hitchin::MatrixField;
using hitchin::TangentVector;

// (-2i) * cell * naive left-to-right sum of tr
inline cplx integrate_direct(const MatrixField& f) {
  const int n = f.grid().n;
  cplx s = 0.0;
  for (int site = 0; site < f.site_count(); ++site)
    for (int r = 0; r < n; ++r) s += f.site(site)[r * n + r];
  return cplx(0.0, -2.0) * f.grid().cell_area() * s;
}

// per-site tr(a b^*), naive
inline cplx trace_ab_star(int n, const cplx* a, const cplx* b) {
  cplx s = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s += a[r * n + c] * std::conj(b[r * n + c]);
  return s;
}

// per-site tr(a b), naive
inline cplx trace_ab(int n, const cplx* a, const cplx* b) {
  cplx s = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s += a[r * n + c] * b[c * n + r];
  return s;
}

// g(X, Y) = 4 cell sum_s Re[tr(alpha beta^*) + tr(gamma delta^*)]
inline double metric_direct(const TangentVector& x, const TangentVector& y) {
  const int n = x.grid().n;
  double s = 0.0;
  for (int site = 0; site < x.alpha_zbar.site_count(); ++site) {
    s += trace_ab_star(n, x.alpha_zbar.site(site), y.alpha_zbar.site(site)).real();
    s += trace_ab_star(n, x.gamma_z.site(site), y.gamma_z.site(site)).real();
  }
  return 4.0 * x.grid().cell_area() * s;
}

// Omega(X, Y) = 4 cell sum_s Im[tr(alpha beta^*) + tr(gamma delta^*)]
inline double omega_direct(const TangentVector& x, const TangentVector& y) {
  const int n = x.grid().n;
  double s = 0.0;
  for (int site = 0; site < x.alpha_zbar.site_count(); ++site) {
    s += trace_ab_star(n, x.alpha_zbar.site(site), y.alpha_zbar.site(site)).imag();
    s += trace_ab_star(n, x.gamma_z.site(site), y.gamma_z.site(site)).imag();
  }
  return 4.0 * x.grid().cell_area() * s;
}

// Q1(X, Y) = 4 cell sum_s [Im tr(alpha delta) - Im tr(gamma beta)]
inline double q1_direct(const TangentVector& x, const TangentVector& y) {
  const int n = x.grid().n;
  double s = 0.0;
  for (int site = 0; site < x.alpha_zbar.site_count(); ++site) {
    s += trace_ab(n, x.alpha_zbar.site(site), y.gamma_z.site(site)).imag();
    s -= trace_ab(n, x.gamma_z.site(site), y.alpha_zbar.site(site)).imag();
  }
  return 4.0 * x.grid().cell_area() * s;
}

// Q2(X, Y) = 4 cell sum_s [Re tr(gamma beta) - Re tr(alpha delta)]
inline double q2_direct(const TangentVector& x, const TangentVector& y) {
  const int n = x.grid().n;
  double s = 0.0;
  for (int site = 0; site < x.alpha_zbar.site_count(); ++site) {
    s += trace_ab(n, x.gamma_z.site(site), y.alpha_zbar.site(site)).real();
    s -= trace_ab(n, x.alpha_zbar.site(site), y.gamma_z.site(site)).real();
  }
  return 4.0 * x.grid().cell_area() * s;
}

// theta1 = -4 cell sum Im tr(phi alpha); theta2 = +4 cell sum Re tr(phi alpha)
inline double theta1_direct(const MatrixField& phi_z, const TangentVector& x) {
  const int n = phi_z.grid().n;
  double s = 0.0;
  for (int site = 0; site < phi_z.site_count(); ++site)
    s += trace_ab(n, phi_z.site(site), x.alpha_zbar.site(site)).imag();
  return -4.0 * phi_z.grid().cell_area() * s;
}

inline double theta2_direct(const MatrixField& phi_z, const TangentVector& x) {
  const int n = phi_z.grid().n;
  double s = 0.0;
  for (int site = 0; site < phi_z.site_count(); ++site)
    s += trace_ab(n, phi_z.site(site), x.alpha_zbar.site(site)).real();
  return 4.0 * phi_z.grid().cell_area() * s;
}

// coeff * exp(2 pi i (kx x / Lx + ky y / Ly)) on the (r, c) matrix entry
inline MatrixField mode_field(const Grid& g, int kx, int ky, int r, int c, cplx coeff) {
  MatrixField f(g);
  for (int iy = 0; iy < g.N; ++iy)
    for (int ix = 0; ix < g.N; ++ix) {
      const double phase =
          2.0 * std::numbers::pi * (double(kx) * ix / g.N + double(ky) * iy / g.N);
      f.at(iy, ix, r, c) = coeff * cplx(std::cos(phase), std::sin(phase));
    }
  return f;
}

inline double max_site_diff(const MatrixField& a, const MatrixField& b) {
  return hitchin::max_site_norm(a - b);
}

// central finite difference of energy along a complex direction pair
inline double energy_fd(const hitchin::Configuration& c, const MatrixField& da,
                        const MatrixField& dphi, double eps) {
  auto shifted = [&](double t) {
    MatrixField a = c.conn.a_zbar;
    MatrixField phi = c.higgs.phi_z;
    a += cplx(t) * da;
    phi += cplx(t) * dphi;
    return hitchin::Configuration(std::move(a), std::move(phi));
  };
  return (hitchin::energy(shifted(eps)) - hitchin::energy(shifted(-eps))) / (2.0 * eps);
}

// analytic directional derivative from the gradient packing
inline double gradient_dot(const hitchin::EnergyGradient& g, const MatrixField& da,
                           const MatrixField& dphi) {
  const int n = g.a.grid().n;
  double s = 0.0;
  for (int site = 0; site < g.a.site_count(); ++site) {
    s += trace_ab_star(n, g.a.site(site), da.site(site)).real();
    s += trace_ab_star(n, g.phi.site(site), dphi.site(site)).real();
  }
  return s;
}

}  // namespace oracle
