#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hitchin {

using cplx = std::complex<double>;

enum class DerivScheme { spectral, central2 };

inline const char* to_string(DerivScheme s) {
  return s == DerivScheme::spectral ? "spectral" : "central2";
}

// Flat periodic grid: N x N sites on [0,Lx) x [0,Ly), z = x + iy,
// carrying n x n complex matrices per site. Sites are row-major in (iy, ix).
struct Grid {
  int N = 16;
  double Lx = 1.0;
  double Ly = 1.0;
  int n = 2;
  DerivScheme scheme = DerivScheme::spectral;

  void validate() const {
    if (N < 4) throw std::invalid_argument("Grid: N must be >= 4");
    if ((N & (N - 1)) != 0) throw std::invalid_argument("Grid: N must be a power of two");
    if (n < 1) throw std::invalid_argument("Grid: n must be positive");
    if (!(Lx > 0.0) || !(Ly > 0.0)) throw std::invalid_argument("Grid: periods must be positive");
  }

  int sites() const { return N * N; }
  double hx() const { return Lx / N; }
  double hy() const { return Ly / N; }
  double cell_area() const { return hx() * hy(); }
  double area() const { return Lx * Ly; }
  double x(int ix) const { return ix * hx(); }
  double y(int iy) const { return iy * hy(); }

  bool operator==(const Grid& o) const {
    return N == o.N && Lx == o.Lx && Ly == o.Ly && n == o.n && scheme == o.scheme;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace hitchin
