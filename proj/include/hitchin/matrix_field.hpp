#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "hitchin/grid.hpp"
#include "hitchin/matrix_ops.hpp"

namespace hitchin {

// One complex n x n matrix per grid site; the carrier for connection and
// Higgs coefficients, gauge parameters and residuals. Immutable by
// convention once built (all operations return new fields).
class MatrixField {
 public:
  MatrixField() = default;
  explicit MatrixField(const Grid& g) : grid_(g), data_(size_t(g.sites()) * g.n * g.n, cplx(0.0)) {
    g.validate();
  }

  const Grid& grid() const { return grid_; }
  int site_count() const { return grid_.sites(); }
  int mat_len() const { return grid_.n * grid_.n; }

  cplx* site(int s) { return data_.data() + size_t(s) * mat_len(); }
  const cplx* site(int s) const { return data_.data() + size_t(s) * mat_len(); }
  cplx* site(int iy, int ix) { return site(iy * grid_.N + ix); }
  const cplx* site(int iy, int ix) const { return site(iy * grid_.N + ix); }

  cplx& at(int iy, int ix, int r, int c) { return site(iy, ix)[r * grid_.n + c]; }
  const cplx& at(int iy, int ix, int r, int c) const { return site(iy, ix)[r * grid_.n + c]; }

  std::span<cplx> raw() { return data_; }
  std::span<const cplx> raw() const { return data_; }

  MatrixField& operator+=(const MatrixField& o) {
    require_same_grid(grid_, o.grid_, "MatrixField::+=");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  MatrixField& operator-=(const MatrixField& o) {
    require_same_grid(grid_, o.grid_, "MatrixField::-=");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  MatrixField& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend MatrixField operator+(MatrixField a, const MatrixField& b) { return a += b; }
  friend MatrixField operator-(MatrixField a, const MatrixField& b) { return a -= b; }
  friend MatrixField operator*(cplx s, MatrixField a) { return a *= s; }

  bool finite() const {
    for (const auto& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

 private:
  Grid grid_;
  std::vector<cplx> data_;
};

// ---- fixed-order pairwise tree reductions -------------------------------
// All sums in the library go through these, in row-major site order, so
// results are bitwise reproducible for any thread count.

template <typename T>
T tree_sum(const T* v, size_t len) {
  if (len == 0) return T(0);
  if (len == 1) return v[0];
  if (len == 2) return v[0] + v[1];
  const size_t half = len / 2;
  return tree_sum(v, half) + tree_sum(v + half, len - half);
}

template <typename T>
T tree_sum(const std::vector<T>& v) {
  return tree_sum(v.data(), v.size());
}

// ---- per-site maps -------------------------------------------------------

MatrixField site_mul(const MatrixField& a, const MatrixField& b);
MatrixField site_commutator(const MatrixField& a, const MatrixField& b);
MatrixField site_adjoint(const MatrixField& a);
MatrixField site_transpose(const MatrixField& a);
MatrixField site_conj(const MatrixField& a);
MatrixField site_expm(const MatrixField& a);

// tr(a b) per site, row-major
std::vector<cplx> site_trace_prod(const MatrixField& a, const MatrixField& b);
std::vector<cplx> site_trace(const MatrixField& a);

// Weighted L2 norm: sqrt(cell_area * sum_s |f(s)|_F^2).
double l2_norm(const MatrixField& f);
double l2_norm2(const MatrixField& f);

// Largest per-site Frobenius norm.
double max_site_norm(const MatrixField& f);

// Flag checks: largest per-site Frobenius defect.
double anti_hermitian_defect(const MatrixField& f);  // |f + f*|
double hermitian_defect(const MatrixField& f);       // |f - f*|
double unitary_defect(const MatrixField& f);         // |f* f - 1|

MatrixField constant_field(const Grid& g, const std::vector<cplx>& mat);
MatrixField identity_field(const Grid& g);

}  // namespace hitchin
