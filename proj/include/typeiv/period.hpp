#pragma once

#include <optional>
#include <string>
#include <vector>

#include "typeiv/monodromy.hpp"
#include "typeiv/scalar.hpp"

// The complex-numeric layer: membership in the domain H+, Hodge norms,
// untwisting of sampled period maps and limit lines, tube-domain charts,
// and the two transvection families with their exact norm identities.
// Most operations are templated so the same formulas run over exact
// Gaussian rationals and over complex doubles.

namespace typeiv {

inline constexpr double kMembershipEps = 1e-9;

template <class S>
typename ScalarOps<S>::Real euclidean_norm2(const DenseVec<S>& v) {
  typename ScalarOps<S>::Real acc(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += ScalarOps<S>::abs2(v(i));
  return acc;
}

// -alpha.conj(alpha); positive on the domain and divergent toward boundary.
template <class S>
typename ScalarOps<S>::Real hodge_norm(const QuadraticSpace& sp, const DenseVec<S>& alpha) {
  return -ScalarOps<S>::real(herm_product_c(sp, alpha, alpha));
}

// Im((alpha.e0)(conj(alpha).e1)) for a rational isotropic plane span{e0,e1};
// constant sign on each component of the domain.
template <class S>
typename ScalarOps<S>::Real oriented_plane_pairing(const QuadraticSpace& sp,
                                                   const DenseVec<S>& alpha,
                                                   const RatVec& e0, const RatVec& e1) {
  S a = form_product_c(sp, alpha, promote_vector<S>(e0));
  S b = form_product_c(sp, alpha, promote_vector<S>(e1));
  return ScalarOps<S>::imag(a * ScalarOps<S>::conjugate(b));
}

// A fixed basepoint singling out one of the two components of
// {alpha.alpha = 0, alpha.conj(alpha) < 0}.
struct DomainWitness {
  SpacePtr space;
  CxVec basepoint;
};

DomainWitness make_domain_witness(SpacePtr space, CxVec basepoint,
                                  double eps = kMembershipEps);

// True iff the oriented real frames (Re a, Im a) and (Re b, Im b) pair
// positively under the form; flips when exactly one argument is conjugated.
bool same_component(const QuadraticSpace& sp, const CxVec& alpha, const CxVec& beta);

bool in_domain(const CxVec& alpha, const DomainWitness& w, double eps = kMembershipEps);

// --- transvections -------------------------------------------------------

// psi_tau(a) = a + tau((a.e0)e1 - (a.e1)e0) for an isotropic plane span{e0,e1}.
// Preserves the bilinear form; the hermitian norm changes by
// -4 Im(tau) Im((a.e0)(conj(a).e1)).
template <class S>
DenseMat<S> psi_tau(const QuadraticSpace& sp, const RatVec& e0, const RatVec& e1,
                    const S& tau) {
  if (sign_of(form_product(sp, e0, e0)) != 0 || sign_of(form_product(sp, e1, e1)) != 0 ||
      sign_of(form_product(sp, e0, e1)) != 0)
    fail(ErrorKind::MalformedInput, "span{e0,e1} is not an isotropic plane");
  RatMat rows(2, sp.dim());
  rows.row(0) = e0.transpose();
  rows.row(1) = e1.transpose();
  if (rank_of(std::move(rows)) != 2)
    fail(ErrorKind::MalformedInput, "e0, e1 are linearly dependent");
  DenseVec<S> pe0 = promote_vector<S>(e0), pe1 = promote_vector<S>(e1);
  DenseVec<S> ge0 = promote_vector<S>(RatVec(sp.gram() * e0));
  DenseVec<S> ge1 = promote_vector<S>(RatVec(sp.gram() * e1));
  DenseMat<S> out = DenseMat<S>::Identity(sp.dim(), sp.dim());
  out += tau * (pe1 * ge0.transpose()) - tau * (pe0 * ge1.transpose());
  return out;
}

// psi_{e,f}(a) = a + (a.e)f - (a.f)e - (1/2)(f.f)(a.e)e for isotropic e and
// f in e^perp.  Preserves the bilinear form; the hermitian norm changes by
// 4|a.e|^2 (p_e(a).Im f + (1/2) Im f.Im f).
template <class S>
DenseMat<S> psi_ef(const QuadraticSpace& sp, const RatVec& e, const DenseVec<S>& f) {
  if (sign_of(form_product(sp, e, e)) != 0)
    fail(ErrorKind::MalformedInput, "e is not isotropic");
  DenseVec<S> pe = promote_vector<S>(e);
  if (!ScalarOps<S>::is_zero(form_product_c(sp, pe, f)))
    fail(ErrorKind::MalformedInput, "f is not orthogonal to e");
  DenseVec<S> ge = promote_vector<S>(RatVec(sp.gram() * e));
  DenseVec<S> gf(sp.dim());
  {
    DenseMat<S> g = promote_matrix<S>(sp.gram());
    gf = g * f;
  }
  S ff = form_product_c(sp, f, f);
  DenseMat<S> out = DenseMat<S>::Identity(sp.dim(), sp.dim());
  out += f * ge.transpose() - pe * gf.transpose() -
         (ff / S(2)) * (pe * ge.transpose());
  return out;
}

// --- tube-domain chart ----------------------------------------------------

// Chart p_e : alpha -> Im((alpha.e)^{-1} alpha) into J^perp/J, represented
// by a rational basis of a complement of J = span{e} in J^perp.
struct TubeChart {
  SpacePtr space;
  RatVec e;
  RatMat complement;        // rows span a complement of J in J^perp
  RatMat quotient_gram;     // restricted form in complement coordinates
};

// Canonical complement: the echelon basis of e^perp with the row carrying
// e's pivot removed.
TubeChart make_tube_chart(SpacePtr space, RatVec e);
TubeChart make_tube_chart(SpacePtr space, RatVec e, RatMat complement);

template <class Real>
struct TubePoint {
  DenseVec<Real> coords;  // in complement coordinates
  DenseVec<Real> lift;    // the representative Im((alpha.e)^{-1} alpha) in H
  Real norm;              // y.y in J^perp/J
};

TubePoint<double> tube_coords(const TubeChart& chart, const CxVec& alpha,
                              double eps = kMembershipEps);
TubePoint<Rational> tube_coords_exact(const TubeChart& chart, const GaussVec& alpha);

// Two cone points lie in the same component of {y.y < 0} iff they pair
// negatively.
template <class Real>
bool same_cone_component(const TubeChart& chart, const DenseVec<Real>& a,
                         const DenseVec<Real>& b) {
  Real acc(0);
  const RatMat& g = chart.quotient_gram;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (sign_of(g(i, j)) == 0) continue;
      if constexpr (std::is_same_v<Real, Rational>)
        acc += a(i) * g(i, j) * b(j);
      else
        acc += a(i) * to_double(g(i, j)) * b(j);
    }
  return acc < Real(0);
}

// --- sampled period maps --------------------------------------------------

struct PeriodSample {
  Cx w;        // in the upper half-plane
  CxVec alpha; // representative of P(w)
};

// Samples of a multivalued period map on the upper half-plane; pairs of
// samples with w' = w + 1 must satisfy P(w') = T P(w).
struct PeriodSampleSet {
  MonodromyOperator monodromy;
  std::vector<PeriodSample> samples;
};

PeriodSampleSet make_period_samples(MonodromyOperator monodromy,
                                    std::vector<PeriodSample> samples,
                                    double eps = kMembershipEps);

struct UntwistedSample {
  Cx s;        // exp(2 pi i w)
  CxVec phi;   // exp(-wN) P(w)
};

std::vector<UntwistedSample> untwist(const PeriodSampleSet& ps, const NilpotentData& nd,
                                     double eps = kMembershipEps);

struct LimitLineOptions {
  int degree = 3;
  double residual_tolerance = 1e-6;
};

struct LimitLineResult {
  CxVec f_lim;     // unit length, first significant coordinate positive real
  double residual; // max sample misfit relative to |f_lim|
  int degree_used;
  std::vector<std::string> diagnostics;
};

// Polynomial extrapolation of the untwisted samples to s = 0.  Throws a
// no-convergence error when the fit residual exceeds the tolerance.
LimitLineResult limit_line(const PeriodSampleSet& ps, const NilpotentData& nd,
                           const LimitLineOptions& opts = {});

struct OrthogonalityReport {
  double max_pairing = 0;  // max over basis v of |v.F| / |F|
  double tolerance = 0;
  bool pass = true;
};

OrthogonalityReport check_limit_orthogonality(const CxVec& f_lim, const Subspace& v,
                                              double tol = 1e-8);

// --- limit mixed Hodge structure on V* -------------------------------------

struct LimitMhs {
  SubspaceClassification classification;
  int weight_quotient = 0;   // (V/V0)* sits in weight 0
  int weight_v0 = 0;         // V0* has pure weight dim V0
  bool f_nonzero_on_v0 = true;  // needed whenever V0 != 0
  bool f_has_hodge_content = false;  // false in the positive definite case
};

LimitMhs limit_mhs(const Subspace& v, const CxVec& f, double eps = kMembershipEps);

}  // namespace typeiv
