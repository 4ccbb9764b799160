#pragma once

// Small n x n complex matrix kernels on raw row-major storage.

#include <cmath>
#include <vector>

#include "hitchin/grid.hpp"

namespace hitchin {

inline void mat_mul(int n, const cplx* a, const cplx* b, cplx* out) {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += a[r * n + k] * b[k * n + c];
      out[r * n + c] = s;
    }
}

// out = a b - b a
inline void mat_commutator(int n, const cplx* a, const cplx* b, cplx* out) {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (int k = 0; k < n; ++k) s += a[r * n + k] * b[k * n + c] - b[r * n + k] * a[k * n + c];
      out[r * n + c] = s;
    }
}

inline void mat_adjoint(int n, const cplx* a, cplx* out) {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r * n + c] = std::conj(a[c * n + r]);
}

inline void mat_transpose(int n, const cplx* a, cplx* out) {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r * n + c] = a[c * n + r];
}

inline void mat_conj(int n, const cplx* a, cplx* out) {
  for (int i = 0; i < n * n; ++i) out[i] = std::conj(a[i]);
}

inline cplx mat_trace(int n, const cplx* a) {
  cplx t = 0.0;
  for (int r = 0; r < n; ++r) t += a[r * n + r];
  return t;
}

inline cplx mat_trace_prod(int n, const cplx* a, const cplx* b) {
  // tr(a b) without forming the product
  cplx t = 0.0;
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) t += a[r * n + k] * b[k * n + r];
  return t;
}

inline double mat_frob2(int n, const cplx* a) {
  double s = 0.0;
  for (int i = 0; i < n * n; ++i) s += std::norm(a[i]);
  return s;
}

inline void mat_identity(int n, cplx* out) {
  for (int i = 0; i < n * n; ++i) out[i] = 0.0;
  for (int r = 0; r < n; ++r) out[r * n + r] = 1.0;
}

// exp(a) by scaling-and-squaring with a Taylor series; fine at desk scale.
inline void mat_expm(int n, const cplx* a, cplx* out) {
  const int nn = n * n;
  double norm = std::sqrt(mat_frob2(n, a));
  int s = 0;
  while (norm > 0.25) {
    norm *= 0.5;
    ++s;
  }
  const double scale = std::ldexp(1.0, -s);
  std::vector<cplx> b(nn), term(nn), acc(nn), tmp(nn);
  for (int i = 0; i < nn; ++i) b[i] = a[i] * scale;
  mat_identity(n, acc.data());
  for (int i = 0; i < nn; ++i) term[i] = b[i];
  for (int k = 1; k < 40; ++k) {
    double t2 = 0.0;
    for (int i = 0; i < nn; ++i) {
      acc[i] += term[i];
      t2 += std::norm(term[i]);
    }
    if (t2 < 1e-34) break;
    mat_mul(n, term.data(), b.data(), tmp.data());
    const double inv = 1.0 / double(k + 1);
    for (int i = 0; i < nn; ++i) term[i] = tmp[i] * inv;
  }
  for (int r = 0; r < s; ++r) {
    mat_mul(n, acc.data(), acc.data(), tmp.data());
    acc.swap(tmp);
  }
  for (int i = 0; i < nn; ++i) out[i] = acc[i];
}

}  // namespace hitchin
