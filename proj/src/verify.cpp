#include "hitchin/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "hitchin/util.hpp"

namespace hitchin {

namespace {

constexpr cplx kI(0.0, 1.0);

struct Suite {
  const VerifyOptions& opts;
  VerifyReport& rep;

  void add(const std::string& name, double measured, double default_tol) {
    double tol = default_tol;
    if (auto it = opts.tol_overrides.find(name); it != opts.tol_overrides.end()) tol = it->second;
    const bool pass = measured <= tol;
    rep.checks.push_back({name, pass, measured, tol});
    rep.overall_pass = rep.overall_pass && pass;
  }

  template <typename F>
  void timed(const std::string& name, F body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms[name] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
};

}  // namespace

TangentVector random_tangent(const Grid& g, std::uint64_t seed, int cutoff) {
  return TangentVector(random_field(2 * seed, g, cutoff, RandomFlag::general),
                       random_field(2 * seed + 1, g, cutoff, RandomFlag::general));
}

Configuration random_configuration(const Grid& g, std::uint64_t seed, int cutoff, double amplitude) {
  MatrixField a = random_field(2 * seed, g, cutoff, RandomFlag::general);
  MatrixField phi = random_field(2 * seed + 1, g, cutoff, RandomFlag::general);
  a *= cplx(amplitude);
  phi *= cplx(amplitude);
  return Configuration(std::move(a), std::move(phi));
}

GaugeTransform random_gauge(const Grid& g, std::uint64_t seed, int cutoff, double scale) {
  MatrixField psi = random_field(seed, g, cutoff, RandomFlag::anti_hermitian);
  psi *= cplx(scale);
  return GaugeTransform{site_expm(psi)};
}

VerifyReport run_verify_suite(const VerifyOptions& opts) {
  opts.grid.validate();
  const Grid& g = opts.grid;
  const int cutoff = g.N / 4;
  const std::uint64_t base = opts.seed * 1000003ULL;
  const int pairs = opts.pairs;

  VerifyReport rep;
  Suite suite{opts, rep};

  std::vector<TangentVector> xs, ys;
  std::vector<double> scales;  // |X|_g |Y|_g per pair
  xs.reserve(pairs);
  ys.reserve(pairs);
  scales.reserve(pairs);
  for (int i = 0; i < pairs; ++i) {
    xs.push_back(random_tangent(g, base + 2 * i, cutoff));
    ys.push_back(random_tangent(g, base + 2 * i + 1, cutoff));
    scales.push_back(tangent_norm(xs.back()) * tangent_norm(ys.back()));
  }

  suite.timed("quaternion_algebra", [&] {
    double worst = 0.0;
    auto diff = [&](const TangentVector& u, const TangentVector& v) {
      return std::max(max_site_norm(u.alpha_zbar - v.alpha_zbar),
                      max_site_norm(u.gamma_z - v.gamma_z));
    };
    for (const TangentVector& x : xs) {
      const TangentVector minus_x = -1.0 * x;
      worst = std::max(worst, diff(apply_I(apply_I(x)), minus_x));
      worst = std::max(worst, diff(apply_J(apply_J(x)), minus_x));
      worst = std::max(worst, diff(apply_K(apply_K(x)), minus_x));
      worst = std::max(worst, diff(apply_I(apply_J(x)), apply_K(x)));
      worst = std::max(worst, diff(apply_J(apply_I(x)), -1.0 * apply_K(x)));
      worst = std::max(worst, diff(apply_J(apply_K(x)), apply_I(x)));
      worst = std::max(worst, diff(apply_K(apply_J(x)), -1.0 * apply_I(x)));
      worst = std::max(worst, diff(apply_K(apply_I(x)), apply_J(x)));
      worst = std::max(worst, diff(apply_I(apply_K(x)), -1.0 * apply_J(x)));
    }
    suite.add("quaternion_algebra", worst, 1e-13);
  });

  suite.timed("compatibility", [&] {
    double w_omega = 0.0, w_q1 = 0.0, w_q2 = 0.0;
    for (int i = 0; i < pairs; ++i) {
      const double s = scales[i];
      w_omega = std::max(w_omega,
                         rel_err_scaled(omega(xs[i], ys[i]), metric_g(xs[i], apply_I(ys[i])), s));
      w_q1 = std::max(w_q1, rel_err_scaled(q1(xs[i], ys[i]), metric_g(xs[i], apply_J(ys[i])), s));
      w_q2 = std::max(w_q2, rel_err_scaled(q2(xs[i], ys[i]), metric_g(xs[i], apply_K(ys[i])), s));
    }
    suite.add("compat_omega", w_omega, 1e-10);
    suite.add("compat_q1", w_q1, 1e-10);
    suite.add("compat_q2", w_q2, 1e-10);
  });

  suite.timed("identity4", [&] {
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
      const TangentVector& x = xs[i];
      const TangentVector& y = ys[i];
      const FormPair lhs_a{site_conj(x.alpha_zbar), MatrixField(g)};
      const FormPair lhs_b{MatrixField(g), cplx(-1.0) * site_transpose(y.alpha_zbar)};
      const cplx lhs = integrate_wedge_trace(lhs_a, lhs_b);
      const FormPair rhs_a{cplx(-1.0) * site_adjoint(x.alpha_zbar), MatrixField(g)};
      const FormPair rhs_b{MatrixField(g), y.alpha_zbar};
      const cplx rhs = integrate_wedge_trace(rhs_a, rhs_b);
      worst = std::max(worst, rel_err_scaled(lhs, rhs, scales[i]));
    }
    suite.add("identity4", worst, 1e-10);
  });

  suite.timed("q_sum", [&] {
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i)
      worst = std::max(worst, rel_err_scaled(q_complex(xs[i], ys[i]),
                                             cplx(q1(xs[i], ys[i]), q2(xs[i], ys[i])), scales[i]));
    suite.add("q_sum", worst, 1e-10);
  });

  suite.timed("dtheta", [&] {
    const Configuration c = random_configuration(g, base + 9001, cutoff, 0.5);
    const int count = std::min(pairs, 10);
    double w1a = 0.0, w1f = 0.0, w2a = 0.0, w2f = 0.0;
    for (int i = 0; i < count; ++i) {
      const double s = scales[i];
      const DthetaResult d1 = dtheta(Theta::one, c, xs[i], ys[i]);
      const DthetaResult d2 = dtheta(Theta::two, c, xs[i], ys[i]);
      w1a = std::max(w1a, rel_err_scaled(d1.analytic, q1(xs[i], ys[i]), s));
      w1f = std::max(w1f, rel_err_scaled(d1.fd, q1(xs[i], ys[i]), s));
      w2a = std::max(w2a, rel_err_scaled(d2.analytic, q2(xs[i], ys[i]), s));
      w2f = std::max(w2f, rel_err_scaled(d2.fd, q2(xs[i], ys[i]), s));
    }
    suite.add("dtheta1_analytic", w1a, 1e-10);
    suite.add("dtheta2_analytic", w2a, 1e-10);
    suite.add("dtheta1_fd", w1f, 1e-6);
    suite.add("dtheta2_fd", w2f, 1e-6);
  });

  suite.timed("metric_chain", [&] {
    double w_g1 = 0.0, w_star = 0.0;
    for (int i = 0; i < pairs; ++i) {
      const double sx = tangent_norm(xs[i]);
      w_g1 = std::max(w_g1, rel_err_scaled(metric_g(xs[i], xs[i]), metric_g_hitchin(xs[i]), sx * sx));
      w_star = std::max(w_star,
                        rel_err_scaled(metric_g(xs[i], ys[i]), metric_g_star_route(xs[i], ys[i]),
                                       scales[i]));
    }
    suite.add("metric_chain_g1", w_g1, 1e-10);
    suite.add("metric_chain_star1", w_star, 1e-10);
  });

  suite.timed("gauge_invariance", [&] {
    const Configuration c = random_configuration(g, base + 9101, cutoff, 0.1);
    const TangentVector& x = xs[0];
    const TangentVector& y = ys[0];
    const double s_xy = scales[0];
    const double s_cx =
        tangent_norm(TangentVector(c.conn.a_zbar, c.higgs.phi_z)) * tangent_norm(x);

    auto deviation = [&](const GaugeTransform& gt) {
      const Configuration cg = gauge_act(gt, c);
      const TangentVector xg = gauge_act_tangent(gt, x);
      const TangentVector yg = gauge_act_tangent(gt, y);
      double w = 0.0;
      w = std::max(w, rel_err_scaled(metric_g(x, y), metric_g(xg, yg), s_xy));
      w = std::max(w, rel_err_scaled(omega(x, y), omega(xg, yg), s_xy));
      w = std::max(w, rel_err_scaled(q1(x, y), q1(xg, yg), s_xy));
      w = std::max(w, rel_err_scaled(q2(x, y), q2(xg, yg), s_xy));
      w = std::max(w, rel_err_scaled(theta1(c, x), theta1(cg, xg), s_cx));
      w = std::max(w, rel_err_scaled(theta2(c, x), theta2(cg, xg), s_cx));
      w = std::max(w, rel_err(energy(c), energy(cg)));
      return w;
    };

    // constant unitary transform
    Grid g1 = g;
    g1.N = 4;  // sample one matrix, then broadcast
    MatrixField u1 = random_field(base + 9102, g1, 0, RandomFlag::unitary);
    std::vector<cplx> mat(u1.site(0), u1.site(0) + g.n * g.n);
    suite.add("gauge_const", deviation(GaugeTransform{constant_field(g, mat)}), 1e-12);

    // band-limited transform; the violation is linear in the transform
    // amplitude, which is sized per scheme (spectral error is aliasing from
    // the exp() tails, central2 error is h^2 product-rule truncation) so the
    // measured value sits well inside 1e-6 yet far above the constant floor
    const int cutoff_g = std::max(1, g.N / 8);
    const double amp = g.scheme == DerivScheme::spectral ? 0.005 : 5e-5;
    const double scale = amp / double(2 * cutoff_g + 1);
    suite.add("gauge_bandlimited", deviation(random_gauge(g, base + 9103, cutoff_g, scale)), 1e-6);
  });

  const int fam_pairs = std::min(pairs, 20);

  suite.timed("flambda_family", [&] {
    const double twopi = 2.0 * std::numbers::pi;
    double w_dec = 0.0, w_i = 0.0, w_1 = 0.0, w_tau = 0.0, w_b1 = 0.0, w_b2 = 0.0;
    for (int i = 0; i < fam_pairs; ++i) {
      const TangentVector& x = xs[i];
      const TangentVector& y = ys[i];
      const double s = scales[i];
      const auto w123 = omega123(x, y);
      for (int k = 0; k < 16; ++k) {
        const double ang = twopi * k / 16.0;
        const cplx lambda(std::cos(ang), std::sin(ang));
        const cplx direct = f_lambda(x, y, lambda);
        const cplx dec = (kI / twopi) * (w123[0] + lambda * w123[1] + w123[2] / lambda);
        w_dec = std::max(w_dec, rel_err_scaled(direct, dec, s));
      }
      const double om = omega(x, y);
      const double v1 = q1(x, y);
      const double v2 = q2(x, y);
      w_i = std::max(w_i, rel_err_scaled(f_lambda(x, y, kI), (kI / twopi) * cplx(om, -v1), s));
      w_i = std::max(w_i, rel_err_scaled(f_lambda(x, y, -kI), (kI / twopi) * cplx(om, v1), s));
      w_1 = std::max(w_1, rel_err_scaled(f_lambda(x, y, cplx(1.0)), (kI / twopi) * cplx(om, -v2), s));
      w_1 = std::max(w_1, rel_err_scaled(f_lambda(x, y, cplx(-1.0)), (kI / twopi) * cplx(om, v2), s));
      const cplx tau = tau_curvature(x, y);
      const auto bundles = trivial_bundle_curvatures(x, y);
      w_tau = std::max(w_tau, rel_err_scaled(tau, kI * om / std::numbers::pi, s));
      w_b1 = std::max(w_b1, rel_err_scaled(bundles.first, cplx(v1 / std::numbers::pi), s));
      w_b2 = std::max(w_b2, rel_err_scaled(bundles.second, cplx(v2 / std::numbers::pi), s));
    }
    suite.add("flambda_decomposition", w_dec, 1e-10);
    suite.add("flambda_lambda_i", w_i, 1e-10);
    suite.add("flambda_lambda_1", w_1, 1e-10);
    suite.add("tau_curvature", w_tau, 1e-10);
    suite.add("bundle_q1", w_b1, 1e-10);
    suite.add("bundle_q2", w_b2, 1e-10);
  });

  return rep;
}

nlohmann::json to_json(const VerifyReport& rep, const VerifyOptions& opts) {
  nlohmann::json j;
  j["environment"] = {
      {"grid",
       {{"N", opts.grid.N},
        {"Lx", opts.grid.Lx},
        {"Ly", opts.grid.Ly},
        {"n", opts.grid.n},
        {"scheme", to_string(opts.grid.scheme)}}},
      {"seed", opts.seed},
      {"pairs", opts.pairs},
  };
  nlohmann::json checks;
  for (const CheckResult& c : rep.checks)
    checks[c.name] = {{"pass", c.pass}, {"measured", c.measured}, {"tolerance", c.tolerance}};
  j["checks"] = checks;
  j["overall_pass"] = rep.overall_pass;
  j["timing_ms"] = rep.timing_ms;
  return j;
}

}  // namespace hitchin
