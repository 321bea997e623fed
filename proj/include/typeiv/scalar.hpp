#pragma once

#include <complex>

#include "typeiv/cyclotomic.hpp"
#include "typeiv/qspace.hpp"
#include "typeiv/rational.hpp"

// Uniform access to the scalar fields the complex layer runs over:
// exact Gaussian rationals and complex doubles, with rational Gram
// matrices promoted into either.

namespace typeiv {

using Cx = std::complex<double>;
using CxMat = Eigen::Matrix<Cx, Eigen::Dynamic, Eigen::Dynamic>;
using CxVec = Eigen::Matrix<Cx, Eigen::Dynamic, 1>;

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  using Real = Rational;
  static Rational promote(const Rational& x) { return x; }
  static Rational conjugate(const Rational& x) { return x; }
  static Rational real(const Rational& x) { return x; }
  static Rational imag(const Rational&) { return Rational(0); }
  static Rational abs2(const Rational& x) { return x * x; }
  static bool is_zero(const Rational& x) { return sign_of(x) == 0; }
};

template <>
struct ScalarOps<GaussQ> {
  using Real = Rational;
  static GaussQ promote(const Rational& x) { return GaussQ(x); }
  static GaussQ conjugate(const GaussQ& z) { return conj(z); }
  static Rational real(const GaussQ& z) { return z.a; }
  static Rational imag(const GaussQ& z) { return z.b; }
  static Rational abs2(const GaussQ& z) { return field_norm(z); }
  static bool is_zero(const GaussQ& z) { return z.is_zero(); }
};

template <>
struct ScalarOps<Cx> {
  using Real = double;
  static Cx promote(const Rational& x) { return Cx(to_double(x), 0.0); }
  static Cx conjugate(const Cx& z) { return std::conj(z); }
  static double real(const Cx& z) { return z.real(); }
  static double imag(const Cx& z) { return z.imag(); }
  static double abs2(const Cx& z) { return std::norm(z); }
  static bool is_zero(const Cx& z) { return z == Cx(0.0, 0.0); }
};

template <class S>
DenseMat<S> promote_matrix(const RatMat& m) {
  DenseMat<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = ScalarOps<S>::promote(m(i, j));
  return out;
}

template <class S>
DenseVec<S> promote_vector(const RatVec& v) {
  DenseVec<S> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = ScalarOps<S>::promote(v(i));
  return out;
}

// Bilinear pairing x.y with the rational Gram promoted to S.
template <class S>
S form_product_c(const QuadraticSpace& sp, const DenseVec<S>& x, const DenseVec<S>& y) {
  if (x.size() != sp.dim() || y.size() != sp.dim())
    fail(ErrorKind::MalformedInput, "vector dimension does not match the space");
  S acc = S(0);
  const RatMat& g = sp.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    S row = S(0);
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (sign_of(g(i, j)) == 0) continue;
      row += ScalarOps<S>::promote(g(i, j)) * y(j);
    }
    acc += x(i) * row;
  }
  return acc;
}

// Hermitian pairing h(x,y) = x . conj(y).
template <class S>
S herm_product_c(const QuadraticSpace& sp, const DenseVec<S>& x, const DenseVec<S>& y) {
  DenseVec<S> yc(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) yc(i) = ScalarOps<S>::conjugate(y(i));
  return form_product_c(sp, x, yc);
}

}  // namespace typeiv
