#include "typeiv/eigenspace.hpp"

namespace typeiv {

namespace {

template <int L>
void chi_eigenspace_impl(const QuadraticSpace& sp, const RatMat& rho, EigenspaceData* out) {
  const Eigen::Index d = rho.rows();
  CycMat<L> shifted = promote_rational<L>(rho);
  for (Eigen::Index i = 0; i < d; ++i) shifted(i, i) -= Cyclo<L>::zeta();
  CycMat<L> basis = kernel(shifted);
  const Eigen::Index m = basis.rows();

  CycMat<L> g = promote_rational<L>(sp.gram());
  CycMat<L> bilinear = basis * g * basis.transpose();
  if (!is_zero_matrix(bilinear))
    throw std::logic_error("chi eigenspace failed to be isotropic for the bilinear form");
  out->bilinear_isotropic = true;

  CycMat<L> herm = basis * g * conj_elementwise<L>(basis).transpose();
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      if (herm(i, j) != conj(herm(j, i)))
        throw std::logic_error("hermitian Gram is not hermitian");

  Signature hs = hermitian_inertia<L>(herm);
  if (hs.zero != 0)
    throw std::logic_error("hermitian form on the chi eigenspace is degenerate");

  out->chi_dim = m;
  out->basis_c0.resize(m, d);
  out->basis_c1.resize(m, d);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      out->basis_c0(i, j) = basis(i, j).a;
      out->basis_c1(i, j) = basis(i, j).b;
    }
  out->herm_c0.resize(m, m);
  out->herm_c1.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      out->herm_c0(i, j) = herm(i, j).a;
      out->herm_c1(i, j) = herm(i, j).b;
    }
  out->hermitian_signature = {hs.positive, hs.negative};
}

}  // namespace

EigenspaceData eigenspace_chi(const SpacePtr& space, const RatMat& rho, int l) {
  if (l != 1 && l != 2 && l != 3 && l != 4 && l != 6)
    fail(ErrorKind::UnsupportedInput,
         "l = " + std::to_string(l) + " would need a cyclotomic field of degree > 2");
  const Eigen::Index d = space->dim();
  if (rho.rows() != d || rho.cols() != d)
    fail(ErrorKind::MalformedInput, "isometry dimension does not match the space");
  if (rho.transpose() * space->gram() * rho != space->gram())
    fail(ErrorKind::MalformedInput, "matrix does not preserve the form");
  RatMat power = RatMat::Identity(d, d);
  for (int i = 0; i < l; ++i) power = power * rho;
  if (power != RatMat(RatMat::Identity(d, d)))
    fail(ErrorKind::MalformedInput, "matrix is not of order dividing l");

  EigenspaceData out;
  out.l = l;
  out.rho = rho;
  if (l <= 2) {
    // zeta is the rational 1 or -1; the eigenspace is an ordinary rational
    // subspace and the hermitian form is the restricted bilinear form.
    RatMat shifted = rho;
    Rational eigenvalue(l == 1 ? 1 : -1);
    for (Eigen::Index i = 0; i < d; ++i) shifted(i, i) -= eigenvalue;
    RatMat basis = kernel(shifted);
    out.chi_dim = basis.rows();
    out.basis_c0 = basis;
    out.basis_c1 = RatMat::Zero(basis.rows(), d);
    RatMat herm = basis * space->gram() * basis.transpose();
    out.herm_c0 = herm;
    out.herm_c1 = RatMat::Zero(herm.rows(), herm.cols());
    out.bilinear_isotropic = is_zero_matrix(herm);
    Signature hs = signature_of(herm);
    out.hermitian_signature = {hs.positive, hs.negative};
    return out;
  }
  switch (l) {
    case 3: chi_eigenspace_impl<3>(*space, rho, &out); break;
    case 4: chi_eigenspace_impl<4>(*space, rho, &out); break;
    default: chi_eigenspace_impl<6>(*space, rho, &out); break;
  }
  return out;
}

}  // namespace typeiv
