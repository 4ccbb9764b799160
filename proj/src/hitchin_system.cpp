#include "hitchin/hitchin_system.hpp"

#include <cmath>
#include <stdexcept>

#include "hitchin/hk_geometry.hpp"
#include "hitchin/parallel.hpp"

namespace hitchin {

namespace {

// Unweighted real pairing Re sum_s tr(a b^*); gradients and CG live here,
// quadrature weights are carried explicitly where they matter.
double re_pairing(const MatrixField& a, const MatrixField& b) {
  require_same_grid(a.grid(), b.grid(), "re_pairing");
  std::vector<double> per(a.site_count());
  const int n = a.grid().n;
  parallel_for(0, a.site_count(), [&](int s) {
    const cplx* x = a.site(s);
    const cplx* y = b.site(s);
    double acc = 0.0;
    for (int i = 0; i < n * n; ++i)
      acc += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    per[s] = acc;
  });
  return tree_sum(per);
}

MatrixField antiherm_part(const MatrixField& m) {
  MatrixField adj = site_adjoint(m);
  MatrixField out(m.grid());
  const int len = m.mat_len();
  parallel_for(0, m.site_count(), [&](int s) {
    for (int i = 0; i < len; ++i) out.site(s)[i] = 0.5 * (m.site(s)[i] - adj.site(s)[i]);
  });
  return out;
}

void check_finite(const Configuration& c, const char* where) {
  if (!c.conn.a_zbar.finite() || !c.higgs.phi_z.finite())
    throw std::domain_error(std::string(where) + ": non-finite field data");
}

// g-adjoint of the orbit map psi -> (-(dbar psi + [a,psi]), [psi,phi]),
// landing back in the anti-Hermitian fields. The 4*cell factor of the
// metric cancels in the normal equations and is dropped.
MatrixField orbit_adjoint(const TangentVector& y, const Configuration& c) {
  const MatrixField a_adj = site_adjoint(c.conn.a_zbar);
  const MatrixField phi_adj = site_adjoint(c.higgs.phi_z);
  MatrixField m = d(y.alpha_zbar) + site_commutator(y.alpha_zbar, a_adj) +
                  site_commutator(y.gamma_z, phi_adj);
  return antiherm_part(m);
}

}  // namespace

Residuals residuals(const Configuration& c) {
  const MatrixField& a = c.conn.a_zbar;
  const MatrixField& phi = c.higgs.phi_z;
  Residuals r;
  r.r1 = curvature(c.conn) + site_commutator(phi, site_adjoint(phi));
  r.r2 = dbar(phi) + site_commutator(a, phi);
  r.r1_norm = l2_norm(r.r1);
  r.r2_norm = l2_norm(r.r2);
  return r;
}

double energy(const Configuration& c) {
  const Residuals r = residuals(c);
  return r.r1_norm * r.r1_norm + r.r2_norm * r.r2_norm;
}

EnergyGradient energy_gradient(const Configuration& c) {
  const MatrixField& a = c.conn.a_zbar;
  const MatrixField& phi = c.higgs.phi_z;
  const Residuals r = residuals(c);
  const MatrixField r1_adj = site_adjoint(r.r1);
  const MatrixField a_adj = site_adjoint(a);
  const MatrixField phi_adj = site_adjoint(phi);

  // dE = 2 cell [ Re<dr1, r1> + Re<dr2, r2> ]; each variation term is moved
  // onto the gradient with (d_z)^adj = -d_zbar and <[X,B],C> = <X,[C,B^*]>.
  const cplx two_cell(2.0 * c.grid().cell_area());

  MatrixField ga = cplx(-1.0) * dbar(r.r1) - dbar(r1_adj) - site_commutator(a, r1_adj) +
                   site_commutator(r.r1, a) + site_commutator(r.r2, phi_adj);
  MatrixField gphi = site_commutator(r.r1, phi) - site_commutator(phi, r1_adj) -
                     d(r.r2) + site_commutator(a_adj, r.r2);
  ga *= two_cell;
  gphi *= two_cell;
  return {std::move(ga), std::move(gphi)};
}

SolveResult solve(const Configuration& c0, const SolveOptions& opts) {
  check_finite(c0, "solve");

  Configuration c = c0;
  SolveTrace trace;
  double step = opts.step0;
  const double min_step = 1e-12 * opts.step0;
  const double armijo = 1e-4;

  Residuals r = residuals(c);
  double e = r.r1_norm * r.r1_norm + r.r2_norm * r.r2_norm;
  trace.records.push_back({0, e, r.r1_norm, r.r2_norm, 0.0});

  for (int iter = 1; iter <= opts.max_iters; ++iter) {
    if (e <= opts.tol) {
      trace.status = SolveStatus::converged;
      return {std::move(c), std::move(trace)};
    }
    const EnergyGradient grad = energy_gradient(c);
    const double g2 = re_pairing(grad.a, grad.a) + re_pairing(grad.phi, grad.phi);
    if (g2 == 0.0) {
      trace.status = e <= opts.tol ? SolveStatus::converged : SolveStatus::max_iters;
      return {std::move(c), std::move(trace)};
    }

    double s = step;
    while (true) {
      MatrixField a_try = c.conn.a_zbar;
      MatrixField phi_try = c.higgs.phi_z;
      a_try += cplx(-s) * grad.a;
      phi_try += cplx(-s) * grad.phi;
      Configuration c_try(std::move(a_try), std::move(phi_try));
      const Residuals r_try = residuals(c_try);
      const double e_try = r_try.r1_norm * r_try.r1_norm + r_try.r2_norm * r_try.r2_norm;
      if (e_try <= e - armijo * s * g2) {
        c = std::move(c_try);
        r = r_try;
        e = e_try;
        trace.records.push_back({iter, e, r.r1_norm, r.r2_norm, s});
        step = 2.0 * s;  // let the next trial grow back
        break;
      }
      s *= 0.5;
      if (s < min_step) {
        trace.status = SolveStatus::diverged;
        return {std::move(c), std::move(trace)};
      }
    }
  }
  trace.status = e <= opts.tol ? SolveStatus::converged : SolveStatus::max_iters;
  return {std::move(c), std::move(trace)};
}

TangentVector orbit_tangent(const MatrixField& psi, const Configuration& c) {
  require_same_grid(psi.grid(), c.grid(), "orbit_tangent");
  if (anti_hermitian_defect(psi) > 1e-10)
    throw std::invalid_argument("orbit_tangent: psi is not anti-Hermitian per site");
  MatrixField alpha = cplx(-1.0) * (dbar(psi) + site_commutator(c.conn.a_zbar, psi));
  MatrixField gamma = site_commutator(psi, c.higgs.phi_z);
  return TangentVector(std::move(alpha), std::move(gamma));
}

TangentVector project_orthogonal(const TangentVector& x, const Configuration& c) {
  require_same_grid(x.grid(), c.grid(), "project_orthogonal");
  const Grid& g = x.grid();

  auto normal_op = [&](const MatrixField& psi) { return orbit_adjoint(orbit_tangent(psi, c), c); };

  const MatrixField b = orbit_adjoint(x, c);
  const double b2 = re_pairing(b, b);
  MatrixField psi(g);
  if (b2 == 0.0) return x;

  // CG on the (consistent, possibly singular) normal equations, to relative
  // residual 1e-10. The operator's near-null directions make CG semiconverge
  // on right-hand sides near rounding level, so the best iterate is kept and
  // the run stops once the residual has clearly left it behind.
  MatrixField res = b;
  MatrixField p = res;
  double rho = b2;
  double rho_best = b2;
  MatrixField psi_best = psi;
  const int max_iters = int(10.0 * std::sqrt(double(g.sites()) * g.n * g.n)) + 1;
  const double tol2 = 1e-20 * b2;
  for (int it = 0; it < max_iters && rho > tol2; ++it) {
    const MatrixField ap = normal_op(p);
    const double denom = re_pairing(p, ap);
    if (denom <= 0.0) break;  // numerical null-space direction; current psi is the lsq point
    const double alpha = rho / denom;
    psi += cplx(alpha) * p;
    res -= cplx(alpha) * ap;
    const double rho_next = re_pairing(res, res);
    if (rho_next < rho_best) {
      rho_best = rho_next;
      psi_best = psi;
    }
    // plain CG residuals bump and recover on ill-conditioned systems; only a
    // runaway far past the best iterate counts as semiconvergent divergence
    if (rho_next > 1e12 * rho_best) break;
    p = res + cplx(rho_next / rho) * p;
    rho = rho_next;
  }

  const TangentVector correction = orbit_tangent(psi_best, c);
  const double x_norm2 = std::max(0.0, metric_g(x, x));
  // a correction at noise level (input already orthogonal) is not applied
  if (metric_g(correction, correction) <= 1e-18 * x_norm2) return x;

  TangentVector out = x - correction;
  if (rho_best > tol2) {
    // contract check: what is delivered is orthogonality of the output, not
    // an inner CG statistic
    const double out_norm = std::sqrt(std::max(0.0, metric_g(out, out)));
    const double x_norm = std::sqrt(x_norm2);
    if (out_norm > 1e-8 * x_norm) {
      for (int probe = 0; probe < 8; ++probe) {
        const MatrixField chi =
            random_field(0xF00D + probe, g, std::max(1, g.N / 4), RandomFlag::anti_hermitian);
        const TangentVector dir = orbit_tangent(chi, c);
        const double dn = std::sqrt(std::max(0.0, metric_g(dir, dir)));
        if (dn == 0.0) continue;
        if (std::abs(metric_g(out, dir)) > 1e-8 * out_norm * dn)
          throw std::runtime_error("project_orthogonal: CG did not reach the residual target");
      }
    }
  }
  return out;
}

LinearizedResiduals linearized_residuals(const Configuration& c, const TangentVector& x) {
  require_same_grid(c.grid(), x.grid(), "linearized_residuals");
  const MatrixField& a = c.conn.a_zbar;
  const MatrixField& phi = c.higgs.phi_z;
  const MatrixField alpha_adj = site_adjoint(x.alpha_zbar);
  const MatrixField a_adj = site_adjoint(a);

  MatrixField dr1 = d(x.alpha_zbar) + dbar(alpha_adj) - site_commutator(alpha_adj, a) -
                    site_commutator(a_adj, x.alpha_zbar) +
                    site_commutator(x.gamma_z, site_adjoint(phi)) +
                    site_commutator(phi, site_adjoint(x.gamma_z));
  MatrixField dr2 = dbar(x.gamma_z) + site_commutator(x.alpha_zbar, phi) +
                    site_commutator(a, x.gamma_z);
  return {std::move(dr1), std::move(dr2)};
}

Configuration fixture_zero(const Grid& g) { return Configuration(MatrixField(g), MatrixField(g)); }

Configuration fixture_diag_higgs(const Grid& g) {
  std::vector<cplx> m(size_t(g.n) * g.n, cplx(0.0));
  for (int r = 0; r < g.n; ++r) m[size_t(r) * g.n + r] = cplx(r % 2 == 0 ? 1.0 : -1.0);
  return Configuration(MatrixField(g), constant_field(g, m));
}

Configuration fixture_diag_higgs_perturbed(const Grid& g, std::uint64_t seed, double amplitude) {
  Configuration c = fixture_diag_higgs(g);
  // N/8 band limit: the energy is quartic in the fields, and the flow's
  // conditioning near the Nyquist bins is aliasing-limited
  const int cutoff = std::max(1, g.N / 8);
  MatrixField da = random_field(seed, g, cutoff, RandomFlag::general);
  MatrixField dphi = random_field(seed + 1, g, cutoff, RandomFlag::general);
  c.conn.a_zbar += cplx(amplitude) * da;
  c.higgs.phi_z += cplx(amplitude) * dphi;
  return c;
}

}  // namespace hitchin
