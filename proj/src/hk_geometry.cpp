#include "hitchin/hk_geometry.hpp"

#include <numbers>

#include "hitchin/util.hpp"

namespace hitchin {

namespace {

// (xi)* of a 1-form: conjugate-transpose the matrix, swap dz <-> dzbar.
FormPair form_star(const FormPair& p) { return {site_adjoint(p.zbar), site_adjoint(p.z)}; }

FormPair form_01(const MatrixField& zbar_coeff) { return {MatrixField(zbar_coeff.grid()), zbar_coeff}; }
FormPair form_10(const MatrixField& z_coeff) { return {z_coeff, MatrixField(z_coeff.grid())}; }

// tilde extension i(phi^{1,0} - phi^{0,1}) built from the (1,0) coefficient:
// coefficients (i phi, i phi*).
FormPair tilde_form(const MatrixField& phi_z) {
  return {cplx(0.0, 1.0) * phi_z, cplx(0.0, 1.0) * site_adjoint(phi_z)};
}

double metric_from_pairs(const TangentVector& x, const TangentVector& y) {
  const cplx ia = integrate_wedge_trace(form_01(x.alpha_zbar), form_star(form_01(y.alpha_zbar)));
  const cplx ig = integrate_wedge_trace(form_10(x.gamma_z), form_star(form_10(y.gamma_z)));
  return 2.0 * ia.imag() - 2.0 * ig.imag();
}

// theta with an arbitrary (1,0) coefficient in the Higgs slot; used by the
// analytic directional derivative, where Phi is replaced by the gamma part
// of the differentiation direction.
cplx theta1_at(const MatrixField& phi_z, const TangentVector& x) {
  const FormPair phi{phi_z, cplx(-1.0) * site_adjoint(phi_z)};
  return -integrate_wedge_trace(phi, alpha_form(x));
}

cplx theta2_at(const MatrixField& phi_z, const TangentVector& x) {
  const FormPair phi10 = form_10(phi_z);
  const FormPair phi01 = form_01(cplx(-1.0) * site_adjoint(phi_z));
  const FormPair a01 = form_01(x.alpha_zbar);
  const FormPair a10 = form_10(cplx(-1.0) * site_adjoint(x.alpha_zbar));
  return cplx(0.0, 1.0) *
         (integrate_wedge_trace(phi10, a01) - integrate_wedge_trace(phi01, a10));
}

cplx theta_at(Theta which, const MatrixField& phi_z, const TangentVector& x) {
  return which == Theta::one ? theta1_at(phi_z, x) : theta2_at(phi_z, x);
}

}  // namespace

double metric_g(const TangentVector& x, const TangentVector& y) {
  require_same_grid(x.grid(), y.grid(), "metric_g");
  return metric_from_pairs(x, y);
}

double tangent_norm(const TangentVector& x) { return std::sqrt(std::max(0.0, metric_g(x, x))); }

double metric_g_hitchin(const TangentVector& x) {
  const cplx ia = integrate_wedge_trace(form_star(form_01(x.alpha_zbar)), form_01(x.alpha_zbar));
  const cplx ig = integrate_wedge_trace(form_10(x.gamma_z), form_star(form_10(x.gamma_z)));
  return (cplx(0.0, 2.0) * (ia + ig)).real();
}

double metric_g_star_route(const TangentVector& x, const TangentVector& y) {
  require_same_grid(x.grid(), y.grid(), "metric_g_star_route");
  const cplx first = -integrate_wedge_trace(alpha_form(x), star1(alpha_form(y)));
  const cplx second =
      integrate_wedge_trace(form_10(x.gamma_z), star2({site_transpose(y.gamma_z), MatrixField(y.grid())}));
  return first.real() - 2.0 * second.imag();
}

TangentVector apply_I(const TangentVector& x) {
  return TangentVector(cplx(0.0, 1.0) * x.alpha_zbar, cplx(0.0, 1.0) * x.gamma_z);
}

TangentVector apply_J(const TangentVector& x) {
  return TangentVector(cplx(0.0, 1.0) * site_adjoint(x.gamma_z),
                       cplx(0.0, -1.0) * site_adjoint(x.alpha_zbar));
}

TangentVector apply_K(const TangentVector& x) {
  return TangentVector(cplx(-1.0) * site_adjoint(x.gamma_z), site_adjoint(x.alpha_zbar));
}

cplx omega_complex(const TangentVector& x, const TangentVector& y) {
  require_same_grid(x.grid(), y.grid(), "omega");
  return integrate_wedge_trace(alpha_form(x), alpha_form(y)) -
         integrate_wedge_trace(gamma_form(x), gamma_form(y));
}

cplx q1_complex_raw(const TangentVector& x, const TangentVector& y) {
  require_same_grid(x.grid(), y.grid(), "q1");
  return -(integrate_wedge_trace(alpha_form(x), gamma_form(y)) +
           integrate_wedge_trace(gamma_form(x), alpha_form(y)));
}

cplx q2_complex_raw(const TangentVector& x, const TangentVector& y) {
  require_same_grid(x.grid(), y.grid(), "q2");
  return integrate_wedge_trace(alpha_form(x), tilde_form(y.gamma_z)) +
         integrate_wedge_trace(tilde_form(x.gamma_z), alpha_form(y));
}

double omega(const TangentVector& x, const TangentVector& y) { return omega_complex(x, y).real(); }
double q1(const TangentVector& x, const TangentVector& y) { return q1_complex_raw(x, y).real(); }
double q2(const TangentVector& x, const TangentVector& y) { return q2_complex_raw(x, y).real(); }

cplx q_complex(const TangentVector& x, const TangentVector& y) {
  require_same_grid(x.grid(), y.grid(), "q_complex");
  return 2.0 * (integrate_wedge_trace(form_10(y.gamma_z), form_01(x.alpha_zbar)) -
                integrate_wedge_trace(form_10(x.gamma_z), form_01(y.alpha_zbar)));
}

double theta1(const Configuration& c, const TangentVector& x) {
  require_same_grid(c.grid(), x.grid(), "theta1");
  return theta1_at(c.higgs.phi_z, x).real();
}

double theta2(const Configuration& c, const TangentVector& x) {
  require_same_grid(c.grid(), x.grid(), "theta2");
  return theta2_at(c.higgs.phi_z, x).real();
}

DthetaResult dtheta(Theta which, const Configuration& c, const TangentVector& x,
                    const TangentVector& y) {
  require_same_grid(c.grid(), x.grid(), "dtheta");
  require_same_grid(c.grid(), y.grid(), "dtheta");

  DthetaResult res;
  // theta is linear in Phi and does not see the connection, so the
  // directional derivative along X substitutes gamma_X for Phi.
  res.analytic = theta_at(which, x.gamma_z, y).real() - theta_at(which, y.gamma_z, x).real();

  double scale = 0.0;
  for (const MatrixField* f :
       {&c.conn.a_zbar, &c.higgs.phi_z, &x.alpha_zbar, &x.gamma_z, &y.alpha_zbar, &y.gamma_z})
    scale = std::max(scale, max_site_norm(*f));
  const double eps = 1e-4 * (1.0 + scale);

  auto shifted = [&](const TangentVector& dir, double t) {
    MatrixField a = c.conn.a_zbar;
    MatrixField phi = c.higgs.phi_z;
    a += cplx(t) * dir.alpha_zbar;
    phi += cplx(t) * dir.gamma_z;
    return Configuration(std::move(a), std::move(phi));
  };
  auto theta_cfg = [&](const Configuration& cc, const TangentVector& v) {
    return theta_at(which, cc.higgs.phi_z, v).real();
  };

  const double dx = (theta_cfg(shifted(x, eps), y) - theta_cfg(shifted(x, -eps), y)) / (2.0 * eps);
  const double dy = (theta_cfg(shifted(y, eps), x) - theta_cfg(shifted(y, -eps), x)) / (2.0 * eps);
  res.fd = dx - dy;
  res.discrepancy = std::abs(res.analytic - res.fd);
  return res;
}

std::array<double, 3> kw_forms(const TangentVector& x, const TangentVector& y) {
  const double twopi = 2.0 * std::numbers::pi;
  return {-omega(x, y) / twopi, q2(x, y) / twopi, -q1(x, y) / twopi};
}

std::array<cplx, 3> prequantum_curvatures(const TangentVector& x, const TangentVector& y) {
  const cplx scale(0.0, 1.0 / std::numbers::pi);
  return {scale * omega_complex(x, y), scale * q1_complex_raw(x, y), scale * q2_complex_raw(x, y)};
}

std::array<cplx, 3> omega123_values(const TangentVector& x, const TangentVector& y) {
  require_same_grid(x.grid(), y.grid(), "omega123");
  const cplx w1 = omega_complex(x, y);
  const cplx w2 = integrate_wedge_trace(form_01(x.alpha_zbar), form_10(y.gamma_z)) +
                  integrate_wedge_trace(form_10(x.gamma_z), form_01(y.alpha_zbar));
  const cplx w3 =
      -(integrate_wedge_trace(form_10(cplx(-1.0) * site_adjoint(x.alpha_zbar)),
                              form_01(cplx(-1.0) * site_adjoint(y.gamma_z))) +
        integrate_wedge_trace(form_01(cplx(-1.0) * site_adjoint(x.gamma_z)),
                              form_10(cplx(-1.0) * site_adjoint(y.alpha_zbar))));
  return {w1, w2, w3};
}

BilinearReport make_bilinear_report(const TangentVector& x, const TangentVector& y) {
  BilinearReport r;
  const cplx w = omega_complex(x, y);
  const cplx v1 = q1_complex_raw(x, y);
  const cplx v2 = q2_complex_raw(x, y);
  r.g = metric_g(x, y);
  r.omega = w.real();
  r.q1 = v1.real();
  r.q2 = v2.real();
  r.q_complex = q_complex(x, y);
  r.omega123 = omega123_values(x, y);

  auto imag_rel = [](cplx v) {
    return std::abs(v.imag()) / std::max(std::abs(v), 1e-300);
  };
  r.identity_residuals["omega_imag"] = imag_rel(w);
  r.identity_residuals["q1_imag"] = imag_rel(v1);
  r.identity_residuals["q2_imag"] = imag_rel(v2);
  r.identity_residuals["q_sum"] = rel_err(r.q_complex, cplx(r.q1, r.q2));
  r.identity_residuals["compat_omega"] = rel_err(r.omega, metric_g(x, apply_I(y)));
  r.identity_residuals["compat_q1"] = rel_err(r.q1, metric_g(x, apply_J(y)));
  r.identity_residuals["compat_q2"] = rel_err(r.q2, metric_g(x, apply_K(y)));
  return r;
}

}  // namespace hitchin
