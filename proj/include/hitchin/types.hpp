#pragma once

#include "hitchin/matrix_field.hpp"

namespace hitchin {

// Coefficient pair (xi_z, xi_zbar) of a matrix-valued 1-form
// xi = xi_z dz + xi_zbar dzbar. All 1-forms in the library are stored this
// way; 2-forms are stored as their dz^dzbar coefficient with
// dz^dzbar = -2i dx^dy fixed once in integrate_2form.
struct FormPair {
  MatrixField z;
  MatrixField zbar;
};

// Unitary connection, stored via its (0,1) coefficient; the (1,0)
// coefficient is always -a_zbar^* per site.
struct UnitaryConnection {
  MatrixField a_zbar;
  const Grid& grid() const { return a_zbar.grid(); }
  MatrixField a_z() const { return cplx(-1.0) * site_adjoint(a_zbar); }
};

// Higgs field, stored via its (1,0) coefficient; the (0,1) extension is
// -phi_z^* per site.
struct HiggsField {
  MatrixField phi_z;
  const Grid& grid() const { return phi_z.grid(); }
  MatrixField phi_zbar() const { return cplx(-1.0) * site_adjoint(phi_z); }
};

struct Configuration {
  UnitaryConnection conn;
  HiggsField higgs;

  Configuration() = default;
  Configuration(MatrixField a, MatrixField phi) : conn{std::move(a)}, higgs{std::move(phi)} {
    require_same_grid(conn.grid(), higgs.grid(), "Configuration");
  }
  const Grid& grid() const { return conn.grid(); }
};

// Tangent vector (alpha^{0,1}, gamma^{1,0}) to the configuration space,
// stored via the independent coefficients; extensions are
// alpha^{1,0} = -alpha_zbar^* dz and gamma^{0,1} = -gamma_z^* dzbar.
struct TangentVector {
  MatrixField alpha_zbar;
  MatrixField gamma_z;

  TangentVector() = default;
  TangentVector(MatrixField a, MatrixField g) : alpha_zbar(std::move(a)), gamma_z(std::move(g)) {
    require_same_grid(alpha_zbar.grid(), gamma_z.grid(), "TangentVector");
  }
  const Grid& grid() const { return alpha_zbar.grid(); }

  TangentVector& operator+=(const TangentVector& o) {
    alpha_zbar += o.alpha_zbar;
    gamma_z += o.gamma_z;
    return *this;
  }
  TangentVector& operator-=(const TangentVector& o) {
    alpha_zbar -= o.alpha_zbar;
    gamma_z -= o.gamma_z;
    return *this;
  }
  TangentVector& operator*=(double s) {
    alpha_zbar *= cplx(s);
    gamma_z *= cplx(s);
    return *this;
  }
  friend TangentVector operator+(TangentVector a, const TangentVector& b) { return a += b; }
  friend TangentVector operator-(TangentVector a, const TangentVector& b) { return a -= b; }
  friend TangentVector operator*(double s, TangentVector a) { return a *= s; }
};

struct GaugeTransform {
  MatrixField g;
  const Grid& grid() const { return g.grid(); }
  double unitary_defect_value() const { return unitary_defect(g); }
};

// Full extended 1-forms from the stored independent components.
inline FormPair alpha_form(const TangentVector& x) {
  return {cplx(-1.0) * site_adjoint(x.alpha_zbar), x.alpha_zbar};
}
inline FormPair gamma_form(const TangentVector& x) {
  return {x.gamma_z, cplx(-1.0) * site_adjoint(x.gamma_z)};
}
inline FormPair higgs_form(const HiggsField& h) {
  return {h.phi_z, cplx(-1.0) * site_adjoint(h.phi_z)};
}
inline FormPair connection_form(const UnitaryConnection& a) {
  return {cplx(-1.0) * site_adjoint(a.a_zbar), a.a_zbar};
}

}  // namespace hitchin
