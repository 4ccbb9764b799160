#include "hitchin/cs_family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hitchin/parallel.hpp"

namespace hitchin {

namespace {

void require_unit(cplx lambda, const char* where) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(where) + ": |lambda| must be 1");
}

}  // namespace

ComplexConnection b_lambda(const Configuration& c, cplx lambda) {
  require_unit(lambda, "b_lambda");
  const cplx inv = 1.0 / lambda;
  MatrixField bz = cplx(-1.0) * site_adjoint(c.conn.a_zbar);
  bz += lambda * c.higgs.phi_z;
  MatrixField bzbar = c.conn.a_zbar;
  bzbar += inv * site_adjoint(c.higgs.phi_z);
  return {std::move(bz), std::move(bzbar)};
}

MatrixField flatness(const Configuration& c, cplx lambda) {
  require_unit(lambda, "flatness");
  const ComplexConnection b = b_lambda(c, lambda);
  return d(b.b_zbar) - dbar(b.b_z) + site_commutator(b.b_z, b.b_zbar);
}

LambdaScanReport flatness_scan(const Configuration& c, int K) {
  if (K < 4) throw std::invalid_argument("flatness_scan: K must be >= 4");
  const Residuals r = residuals(c);
  const MatrixField r2_adj = site_adjoint(r.r2);

  LambdaScanReport rep;
  rep.K = K;
  rep.lambdas.resize(K);
  rep.flatness_norms.resize(K);
  rep.decomposition_residuals.resize(K);
  for (int k = 0; k < K; ++k) {
    const double ang = 2.0 * std::numbers::pi * k / K;
    const cplx lambda(std::cos(ang), std::sin(ang));
    rep.lambdas[k] = lambda;
    const MatrixField f = flatness(c, lambda);
    rep.flatness_norms[k] = l2_norm(f);
    MatrixField predicted = r.r1;
    predicted += cplx(-1.0) * lambda * r.r2;
    predicted += (1.0 / lambda) * r2_adj;
    rep.decomposition_residuals[k] = max_site_norm(f - predicted);
  }
  return rep;
}

FormPair tilde_lift(const TangentVector& x, cplx lambda) {
  require_unit(lambda, "tilde_lift");
  const cplx inv = 1.0 / lambda;
  MatrixField z = cplx(-1.0) * site_adjoint(x.alpha_zbar);
  z += lambda * x.gamma_z;
  MatrixField zbar = x.alpha_zbar;
  zbar += inv * site_adjoint(x.gamma_z);
  return {std::move(z), std::move(zbar)};
}

std::array<cplx, 3> omega123(const TangentVector& x, const TangentVector& y) {
  return omega123_values(x, y);
}

cplx f_lambda(const TangentVector& x, const TangentVector& y, cplx lambda) {
  require_same_grid(x.grid(), y.grid(), "f_lambda");
  require_unit(lambda, "f_lambda");
  const cplx scale(0.0, 1.0 / (2.0 * std::numbers::pi));
  return scale * integrate_wedge_trace(tilde_lift(x, lambda), tilde_lift(y, lambda));
}

cplx tau_curvature(const TangentVector& x, const TangentVector& y) {
  return f_lambda(x, y, cplx(0.0, 1.0)) + f_lambda(x, y, cplx(0.0, -1.0));
}

std::pair<cplx, cplx> trivial_bundle_curvatures(const TangentVector& x, const TangentVector& y) {
  const cplx tau = tau_curvature(x, y);
  return {2.0 * f_lambda(x, y, cplx(0.0, 1.0)) - tau, 2.0 * f_lambda(x, y, cplx(1.0)) - tau};
}

std::array<cplx, 3> laurent_fit(const std::array<cplx, 3>& lambdas, const std::array<cplx, 3>& values) {
  // 3x3 solve of c0 + c+ l_j + c- / l_j = v_j by Gaussian elimination.
  cplx m[3][4];
  for (int j = 0; j < 3; ++j) {
    m[j][0] = 1.0;
    m[j][1] = lambdas[j];
    m[j][2] = 1.0 / lambdas[j];
    m[j][3] = values[j];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int j = col + 1; j < 3; ++j)
      if (std::abs(m[j][col]) > std::abs(m[piv][col])) piv = j;
    if (std::abs(m[piv][col]) < 1e-14)
      throw std::invalid_argument("laurent_fit: lambdas are not distinct");
    if (piv != col)
      for (int k = 0; k < 4; ++k) std::swap(m[piv][k], m[col][k]);
    for (int j = 0; j < 3; ++j) {
      if (j == col) continue;
      const cplx f = m[j][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[j][k] -= f * m[col][k];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace hitchin
