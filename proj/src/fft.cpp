#include "hitchin/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hitchin {

void fft(std::span<cplx> v, bool inverse) {
  const size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft: length must be a power of two");
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cplx w(1.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const cplx u = v[i + k];
        const cplx t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wl;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / double(n);
    for (auto& x : v) x *= inv;
  }
}

void fft2(std::vector<cplx>& field, int N, bool inverse) {
  if (int(field.size()) != N * N) throw std::invalid_argument("fft2: size mismatch");
  for (int iy = 0; iy < N; ++iy) fft(std::span<cplx>(field.data() + size_t(iy) * N, size_t(N)), inverse);
  std::vector<cplx> col(N);
  for (int ix = 0; ix < N; ++ix) {
    for (int iy = 0; iy < N; ++iy) col[iy] = field[size_t(iy) * N + ix];
    fft(col, inverse);
    for (int iy = 0; iy < N; ++iy) field[size_t(iy) * N + ix] = col[iy];
  }
}

}  // namespace hitchin
