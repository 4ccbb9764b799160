#include "hitchin/calculus.hpp"

#include <numbers>
#include <stdexcept>

#include "hitchin/fft.hpp"
#include "hitchin/parallel.hpp"

namespace hitchin {

namespace {

enum class Slot { z, zbar };

// Derivative symbols at signed mode (kx, ky):
//   d/dz    -> (eta + i xi)/2
//   d/dzbar -> (-eta + i xi)/2
// with xi = 2 pi kx / Lx, eta = 2 pi ky / Ly. The Nyquist frequency is
// zeroed (as an odd operator must on that self-conjugate mode); this keeps
// (d f)^* = dbar (f^*) exact on every grid field, matching central2, and
// leaves fields below the Nyquist limit untouched.
cplx deriv_symbol(Slot slot, int kx, int ky, const Grid& g) {
  const int nyq = g.N / 2;
  const double xi = (kx == -nyq) ? 0.0 : 2.0 * std::numbers::pi * kx / g.Lx;
  const double eta = (ky == -nyq) ? 0.0 : 2.0 * std::numbers::pi * ky / g.Ly;
  return slot == Slot::z ? cplx(eta * 0.5, xi * 0.5) : cplx(-eta * 0.5, xi * 0.5);
}

MatrixField derivative_spectral(const MatrixField& f, Slot slot) {
  const Grid& g = f.grid();
  const int N = g.N;
  MatrixField out(g);
  const int channels = g.n * g.n;
  parallel_for(0, channels, [&](int ch) {
    std::vector<cplx> buf(size_t(N) * N);
    for (int s = 0; s < f.site_count(); ++s) buf[s] = f.site(s)[ch];
    fft2(buf, N, false);
    for (int jy = 0; jy < N; ++jy) {
      const int ky = signed_freq(jy, N);
      for (int jx = 0; jx < N; ++jx) {
        const int kx = signed_freq(jx, N);
        buf[size_t(jy) * N + jx] *= deriv_symbol(slot, kx, ky, g);
      }
    }
    fft2(buf, N, true);
    for (int s = 0; s < f.site_count(); ++s) out.site(s)[ch] = buf[s];
  });
  return out;
}

MatrixField derivative_central2(const MatrixField& f, Slot slot) {
  const Grid& g = f.grid();
  const int N = g.N;
  const int len = f.mat_len();
  MatrixField out(g);
  const double cx = 1.0 / (2.0 * g.hx());
  const double cy = 1.0 / (2.0 * g.hy());
  // d/dz = (Dx - i Dy)/2, d/dzbar = (Dx + i Dy)/2
  const cplx wy = slot == Slot::z ? cplx(0.0, -0.5) : cplx(0.0, 0.5);
  parallel_for(0, f.site_count(), [&](int s) {
    const int iy = s / N, ix = s % N;
    const int xp = iy * N + (ix + 1) % N;
    const int xm = iy * N + (ix + N - 1) % N;
    const int yp = ((iy + 1) % N) * N + ix;
    const int ym = ((iy + N - 1) % N) * N + ix;
    const cplx* fxp = f.site(xp);
    const cplx* fxm = f.site(xm);
    const cplx* fyp = f.site(yp);
    const cplx* fym = f.site(ym);
    cplx* o = out.site(s);
    for (int i = 0; i < len; ++i) {
      const cplx dx = (fxp[i] - fxm[i]) * cx;
      const cplx dy = (fyp[i] - fym[i]) * cy;
      o[i] = 0.5 * dx + wy * dy;
    }
  });
  return out;
}

MatrixField derivative(const MatrixField& f, Slot slot) {
  f.grid().validate();
  return f.grid().scheme == DerivScheme::spectral ? derivative_spectral(f, slot)
                                                  : derivative_central2(f, slot);
}

}  // namespace

MatrixField dbar(const MatrixField& f) { return derivative(f, Slot::zbar); }
MatrixField d(const MatrixField& f) { return derivative(f, Slot::z); }

cplx integrate_scalar_2form(const Grid& g, const std::vector<cplx>& values) {
  if (int(values.size()) != g.sites()) throw std::invalid_argument("integrate_scalar_2form: size mismatch");
  return cplx(0.0, -2.0) * g.cell_area() * tree_sum(values);
}

cplx integrate_2form(const MatrixField& c) { return integrate_scalar_2form(c.grid(), site_trace(c)); }

std::vector<cplx> wedge_trace(const FormPair& p, const FormPair& q) {
  require_same_grid(p.z.grid(), p.zbar.grid(), "wedge_trace");
  require_same_grid(p.z.grid(), q.z.grid(), "wedge_trace");
  require_same_grid(p.z.grid(), q.zbar.grid(), "wedge_trace");
  const int n = p.z.grid().n;
  std::vector<cplx> out(p.z.site_count());
  parallel_for(0, p.z.site_count(), [&](int s) {
    out[s] = mat_trace_prod(n, p.z.site(s), q.zbar.site(s)) -
             mat_trace_prod(n, p.zbar.site(s), q.z.site(s));
  });
  return out;
}

cplx integrate_wedge_trace(const FormPair& p, const FormPair& q) {
  return integrate_scalar_2form(p.z.grid(), wedge_trace(p, q));
}

FormPair star1(const FormPair& p) {
  return {cplx(0.0, -1.0) * p.z, cplx(0.0, 1.0) * p.zbar};
}

FormPair star2(const FormPair& p) {
  return {cplx(-1.0) * site_conj(p.zbar), site_conj(p.z)};
}

FormPair tilde_star2(const FormPair& p) {
  return {cplx(-1.0) * site_adjoint(p.zbar), site_adjoint(p.z)};
}

MatrixField curvature(const UnitaryConnection& a) {
  const MatrixField az = a.a_z();
  return d(a.a_zbar) - dbar(az) + site_commutator(az, a.a_zbar);
}

Configuration gauge_act(const GaugeTransform& g, const Configuration& c) {
  require_same_grid(g.grid(), c.grid(), "gauge_act");
  if (g.unitary_defect_value() > 1e-12)
    throw std::invalid_argument("gauge_act: transform is not unitary per site");
  const MatrixField ginv = site_adjoint(g.g);
  MatrixField a = site_mul(site_mul(g.g, c.conn.a_zbar), ginv) - site_mul(dbar(g.g), ginv);
  MatrixField phi = site_mul(site_mul(g.g, c.higgs.phi_z), ginv);
  return Configuration(std::move(a), std::move(phi));
}

TangentVector gauge_act_tangent(const GaugeTransform& g, const TangentVector& x) {
  require_same_grid(g.grid(), x.grid(), "gauge_act_tangent");
  if (g.unitary_defect_value() > 1e-12)
    throw std::invalid_argument("gauge_act_tangent: transform is not unitary per site");
  const MatrixField ginv = site_adjoint(g.g);
  return TangentVector(site_mul(site_mul(g.g, x.alpha_zbar), ginv),
                       site_mul(site_mul(g.g, x.gamma_z), ginv));
}

}  // namespace hitchin
