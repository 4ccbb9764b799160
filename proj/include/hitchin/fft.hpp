#pragma once

#include <span>
#include <vector>

#include "hitchin/grid.hpp"

namespace hitchin {

// In-place iterative radix-2 FFT; len must be a power of two.
// Forward is unnormalized; inverse divides by len.
void fft(std::span<cplx> v, bool inverse);

// 2D FFT of an N x N scalar field stored row-major (iy, ix).
void fft2(std::vector<cplx>& field, int N, bool inverse);

// Signed frequency for index j of an N-point transform: j for j < N/2,
// j - N otherwise (Nyquist maps to -N/2).
inline int signed_freq(int j, int N) { return j < N / 2 ? j : j - N; }

}  // namespace hitchin
