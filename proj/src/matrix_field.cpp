#include "hitchin/matrix_field.hpp"

#include <stdexcept>

#include "hitchin/parallel.hpp"

namespace hitchin {

namespace {

template <typename F>
MatrixField binary_map(const MatrixField& a, const MatrixField& b, const char* where, F f) {
  require_same_grid(a.grid(), b.grid(), where);
  MatrixField out(a.grid());
  const int n = a.grid().n;
  parallel_for(0, a.site_count(), [&](int s) { f(n, a.site(s), b.site(s), out.site(s)); });
  return out;
}

template <typename F>
MatrixField unary_map(const MatrixField& a, F f) {
  MatrixField out(a.grid());
  const int n = a.grid().n;
  parallel_for(0, a.site_count(), [&](int s) { f(n, a.site(s), out.site(s)); });
  return out;
}

}  // namespace

MatrixField site_mul(const MatrixField& a, const MatrixField& b) {
  return binary_map(a, b, "site_mul", [](int n, const cplx* x, const cplx* y, cplx* o) { mat_mul(n, x, y, o); });
}

MatrixField site_commutator(const MatrixField& a, const MatrixField& b) {
  return binary_map(a, b, "site_commutator",
                    [](int n, const cplx* x, const cplx* y, cplx* o) { mat_commutator(n, x, y, o); });
}

MatrixField site_adjoint(const MatrixField& a) {
  return unary_map(a, [](int n, const cplx* x, cplx* o) { mat_adjoint(n, x, o); });
}

MatrixField site_transpose(const MatrixField& a) {
  return unary_map(a, [](int n, const cplx* x, cplx* o) { mat_transpose(n, x, o); });
}

MatrixField site_conj(const MatrixField& a) {
  return unary_map(a, [](int n, const cplx* x, cplx* o) { mat_conj(n, x, o); });
}

MatrixField site_expm(const MatrixField& a) {
  return unary_map(a, [](int n, const cplx* x, cplx* o) { mat_expm(n, x, o); });
}

std::vector<cplx> site_trace_prod(const MatrixField& a, const MatrixField& b) {
  require_same_grid(a.grid(), b.grid(), "site_trace_prod");
  std::vector<cplx> out(a.site_count());
  const int n = a.grid().n;
  parallel_for(0, a.site_count(), [&](int s) { out[s] = mat_trace_prod(n, a.site(s), b.site(s)); });
  return out;
}

std::vector<cplx> site_trace(const MatrixField& a) {
  std::vector<cplx> out(a.site_count());
  const int n = a.grid().n;
  parallel_for(0, a.site_count(), [&](int s) { out[s] = mat_trace(n, a.site(s)); });
  return out;
}

double l2_norm2(const MatrixField& f) {
  std::vector<double> per(f.site_count());
  const int n = f.grid().n;
  parallel_for(0, f.site_count(), [&](int s) { per[s] = mat_frob2(n, f.site(s)); });
  return f.grid().cell_area() * tree_sum(per);
}

double l2_norm(const MatrixField& f) { return std::sqrt(l2_norm2(f)); }

double max_site_norm(const MatrixField& f) {
  const int n = f.grid().n;
  double m = 0.0;
  for (int s = 0; s < f.site_count(); ++s) m = std::max(m, std::sqrt(mat_frob2(n, f.site(s))));
  return m;
}

double anti_hermitian_defect(const MatrixField& f) {
  const int n = f.grid().n;
  std::vector<cplx> adj(n * n);
  double m = 0.0;
  for (int s = 0; s < f.site_count(); ++s) {
    mat_adjoint(n, f.site(s), adj.data());
    double d = 0.0;
    for (int i = 0; i < n * n; ++i) d += std::norm(f.site(s)[i] + adj[i]);
    m = std::max(m, std::sqrt(d));
  }
  return m;
}

double hermitian_defect(const MatrixField& f) {
  const int n = f.grid().n;
  std::vector<cplx> adj(n * n);
  double m = 0.0;
  for (int s = 0; s < f.site_count(); ++s) {
    mat_adjoint(n, f.site(s), adj.data());
    double d = 0.0;
    for (int i = 0; i < n * n; ++i) d += std::norm(f.site(s)[i] - adj[i]);
    m = std::max(m, std::sqrt(d));
  }
  return m;
}

double unitary_defect(const MatrixField& f) {
  const int n = f.grid().n;
  std::vector<cplx> adj(n * n), prod(n * n);
  double m = 0.0;
  for (int s = 0; s < f.site_count(); ++s) {
    mat_adjoint(n, f.site(s), adj.data());
    mat_mul(n, adj.data(), f.site(s), prod.data());
    for (int r = 0; r < n; ++r) prod[r * n + r] -= 1.0;
    m = std::max(m, std::sqrt(mat_frob2(n, prod.data())));
  }
  return m;
}

MatrixField constant_field(const Grid& g, const std::vector<cplx>& mat) {
  if (int(mat.size()) != g.n * g.n) throw std::invalid_argument("constant_field: matrix size mismatch");
  MatrixField out(g);
  for (int s = 0; s < out.site_count(); ++s)
    for (int i = 0; i < out.mat_len(); ++i) out.site(s)[i] = mat[i];
  return out;
}

MatrixField identity_field(const Grid& g) {
  MatrixField out(g);
  for (int s = 0; s < out.site_count(); ++s) mat_identity(g.n, out.site(s));
  return out;
}

}  // namespace hitchin
