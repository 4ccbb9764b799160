#pragma once

#include <algorithm>
#include <cmath>

#include "hitchin/grid.hpp"

namespace hitchin {

inline double rel_err(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

inline double rel_err(cplx a, cplx b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

// Identity residual for bilinear values: relative to the natural scale of
// the inputs (e.g. |X| |Y|), so accidental cancellation of the value itself
// does not blow up the quotient.
inline double rel_err_scaled(double a, double b, double scale) {
  const double denom = std::max({std::abs(a), std::abs(b), scale, 1e-300});
  return std::abs(a - b) / denom;
}

inline double rel_err_scaled(cplx a, cplx b, double scale) {
  const double denom = std::max({std::abs(a), std::abs(b), scale, 1e-300});
  return std::abs(a - b) / denom;
}

}  // namespace hitchin
