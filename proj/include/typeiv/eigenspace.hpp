#pragma once

#include <utility>

#include "typeiv/cyclotomic.hpp"
#include "typeiv/qspace.hpp"

namespace typeiv {

// The chi eigenspace of a finite-order rational isometry: vectors v with
// rho v = zeta_l v, carried over Q(zeta_l).  Matrices over the field are
// stored as rational pairs c0 + zeta*c1 so the runtime l stays a plain int.
struct EigenspaceData {
  int l = 1;
  RatMat rho;
  RatMat basis_c0;  // chi basis rows are basis_c0 + zeta*basis_c1
  RatMat basis_c1;
  Eigen::Index chi_dim = 0;
  std::pair<int, int> hermitian_signature{0, 0};  // (positive, negative)
  RatMat herm_c0;  // hermitian Gram h(v_i, v_j) = v_i . conj(v_j)
  RatMat herm_c1;
  bool bilinear_isotropic = false;  // v.w = 0 for all chi pairs (holds for l >= 3)
};

// Requires rho^l = id and rho orthogonal for the form; l in {1,2,3,4,6}.
EigenspaceData eigenspace_chi(const SpacePtr& space, const RatMat& rho, int l);

// Sesquilinear inertia of a hermitian matrix over Q(zeta_L).
template <int L>
Signature hermitian_inertia(CycMat<L> m);

template <int L>
CycMat<L> conj_elementwise(const CycMat<L>& m) {
  CycMat<L> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = conj(m(i, j));
  return out;
}

template <int L>
CycMat<L> promote_rational(const RatMat& m) {
  CycMat<L> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Cyclo<L>(m(i, j));
  return out;
}

template <int L>
Signature hermitian_inertia(CycMat<L> m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) fail(ErrorKind::MalformedInput, "hermitian inertia of non-square matrix");
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (!m(i, i).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      Eigen::Index oi = -1, oj = -1;
      for (Eigen::Index i = k; i < n && oi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n && oi < 0; ++j)
          if (!m(i, j).is_zero()) {
            oi = i;
            oj = j;
          }
      if (oi < 0) {
        sig.zero += static_cast<int>(n - k);
        return sig;
      }
      // h(x + t y, x + t y) = 2|t|^2 > 0 for t = h(x, y).
      Cyclo<L> t = m(oi, oj);
      m.row(oi) += t * m.row(oj);
      m.col(oi) += conj(t) * m.col(oj);
      piv = oi;
    }
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      m.col(piv).swap(m.col(k));
    }
    if (!m(k, k).is_rational())
      fail(ErrorKind::MalformedInput, "matrix is not hermitian");
    if (sign_of(m(k, k).a) > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Cyclo<L> f = m(i, k) / m(k, k);
      m.row(i) -= f * m.row(k);
      m.col(i) -= conj(f) * m.col(k);
    }
  }
  return sig;
}

}  // namespace typeiv
