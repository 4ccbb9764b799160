#pragma once

#include <vector>

#include "hitchin/types.hpp"

namespace hitchin {

// Flat Wirtinger derivatives, d/dzbar = (dx + i dy)/2 and
// d/dz = (dx - i dy)/2, per the grid's scheme (spectral = exact on
// band-limited fields, central2 = second-order centered differences).
MatrixField dbar(const MatrixField& f);
MatrixField d(const MatrixField& f);

// Integral of the 2-form c dz^dzbar over the torus with
// dz^dzbar = -2i dx^dy: returns (-2i) * cell_area * tree-sum of tr(c).
cplx integrate_2form(const MatrixField& c);
cplx integrate_scalar_2form(const Grid& g, const std::vector<cplx>& values);

// dz^dzbar coefficient of Tr(xi ^ eta): tr(xi_z eta_zbar - xi_zbar eta_z)
// per site.
std::vector<cplx> wedge_trace(const FormPair& p, const FormPair& q);

// Convenience: integral of Tr(p ^ q).
cplx integrate_wedge_trace(const FormPair& p, const FormPair& q);

// Hodge-type slot operators on coefficient pairs:
//   star1 (eta dz) = -i eta dz,            star1 (eta dzbar) = +i eta dzbar
//   star2 (eta dz) = conj(eta) dzbar,      star2 (eta dzbar) = -conj(eta) dz
//   tilde_star2 = star2 after entrywise transpose, i.e.
//     tilde_star2 (eta dz) = eta^* dzbar,  tilde_star2 (eta dzbar) = -eta^* dz
FormPair star1(const FormPair& p);
FormPair star2(const FormPair& p);
FormPair tilde_star2(const FormPair& p);

// dz^dzbar coefficient of F(A) = dA + A^A:
// F_c = d_z a_zbar - d_zbar a_z + [a_z, a_zbar] with a_z = -a_zbar^*.
MatrixField curvature(const UnitaryConnection& a);

// Gauge action: a_zbar -> g a_zbar g^-1 - (dbar g) g^-1, phi -> g phi g^-1,
// conjugating the operator dbar + a_zbar. g^-1 = g^* (unitary per site).
Configuration gauge_act(const GaugeTransform& g, const Configuration& c);
TangentVector gauge_act_tangent(const GaugeTransform& g, const TangentVector& x);

enum class RandomFlag { general, anti_hermitian, unitary };

// Deterministic band-limited random field: independent complex Gaussian
// Fourier coefficients on modes with max(|kx|,|ky|) <= cutoff, zero above.
// anti_hermitian projects (f - f^*)/2 per site; unitary exponentiates an
// anti-Hermitian sample per site.
MatrixField random_field(std::uint64_t seed, const Grid& g, int cutoff, RandomFlag flag);

}  // namespace hitchin
