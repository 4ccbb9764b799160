#pragma once

#include <cstdint>
#include <vector>

#include "hitchin/calculus.hpp"

namespace hitchin {

// Residuals of the self-duality equations at a configuration.
//   r1 = F_c + [phi_z, phi_z^*]        (dz^dzbar coefficient; the stored
//        coefficient is Hermitian per site, the anti-Hermitian object is
//        the dx^dy-normalized -2i r1)
//   r2 = dbar phi_z + [a_zbar, phi_z]  (dzbar^dz coefficient; the global
//        dz^dzbar orientation carries -r2, the sign is absorbed here once)
struct Residuals {
  MatrixField r1;
  MatrixField r2;
  double r1_norm = 0.0;
  double r2_norm = 0.0;
};

Residuals residuals(const Configuration& c);

// Least-squares functional ||r1||^2 + ||r2||^2 in the weighted L2 norm;
// zero exactly on solutions.
double energy(const Configuration& c);

// Gradient of energy with respect to the real and imaginary parts of every
// entry of (a_zbar, phi_z), packed as complex fields G with
//   dE along (da, dphi) = Re sum_s [tr(G_a da^*) + tr(G_phi dphi^*)].
struct EnergyGradient {
  MatrixField a;
  MatrixField phi;
};

EnergyGradient energy_gradient(const Configuration& c);

enum class SolveStatus { converged, max_iters, diverged };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iters: return "max_iters";
    default: return "diverged";
  }
}

struct SolveRecord {
  int iter = 0;
  double energy = 0.0;
  double r1_norm = 0.0;
  double r2_norm = 0.0;
  double step = 0.0;
};

struct SolveTrace {
  std::vector<SolveRecord> records;
  SolveStatus status = SolveStatus::max_iters;
};

struct SolveOptions {
  int max_iters = 5000;
  double tol = 1e-16;
  double step0 = 0.1;
};

struct SolveResult {
  Configuration config;
  SolveTrace trace;
};

// Gradient descent with Armijo backtracking (constant 1e-4, halving);
// deterministic given inputs. Throws std::domain_error on non-finite input.
SolveResult solve(const Configuration& c0, const SolveOptions& opts = {});

// Infinitesimal gauge direction of an anti-Hermitian parameter:
//   alpha_zbar = -(dbar psi + [a_zbar, psi]),  gamma_z = [psi, phi_z],
// the t-derivative at 0 of gauge_act(exp(t psi), c).
TangentVector orbit_tangent(const MatrixField& psi, const Configuration& c);

// g-orthogonal projection of X away from the gauge orbit through c, by CG
// on the normal equations for psi. Relative residual target 1e-10; throws
// std::runtime_error if CG exceeds 10 sqrt(grid DOF) iterations.
TangentVector project_orthogonal(const TangentVector& x, const Configuration& c);

// Directional derivative of (r1, r2) at c along X.
struct LinearizedResiduals {
  MatrixField r1;
  MatrixField r2;
};

LinearizedResiduals linearized_residuals(const Configuration& c, const TangentVector& x);

// Named starting points used by the CLI and tests.
Configuration fixture_zero(const Grid& g);
Configuration fixture_diag_higgs(const Grid& g);
Configuration fixture_diag_higgs_perturbed(const Grid& g, std::uint64_t seed, double amplitude = 1e-2);

}  // namespace hitchin
