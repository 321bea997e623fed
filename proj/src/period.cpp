#include "typeiv/period.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>

namespace typeiv {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

Eigen::Matrix2d frame_pairing(const QuadraticSpace& sp, const CxVec& alpha,
                              const CxVec& beta) {
  const Eigen::Index d = sp.dim();
  Eigen::VectorXd x1(d), x2(d), y1(d), y2(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    x1(i) = alpha(i).real();
    x2(i) = alpha(i).imag();
    y1(i) = beta(i).real();
    y2(i) = beta(i).imag();
  }
  Eigen::MatrixXd g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = to_double(sp.gram()(i, j));
  Eigen::Matrix2d m;
  m << x1.dot(g * y1), x1.dot(g * y2), x2.dot(g * y1), x2.dot(g * y2);
  return m;
}

bool frame_degenerate(const CxVec& alpha) {
  // alpha real-proportional <=> Re alpha, Im alpha linearly dependent.
  const Eigen::Index d = alpha.size();
  Eigen::VectorXd x(d), y(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    x(i) = alpha(i).real();
    y(i) = alpha(i).imag();
  }
  double xx = x.squaredNorm(), yy = y.squaredNorm(), xy = x.dot(y);
  return xx * yy - xy * xy <= 1e-24 * (1.0 + xx) * (1.0 + yy);
}

}  // namespace

DomainWitness make_domain_witness(SpacePtr space, CxVec basepoint, double eps) {
  if (basepoint.size() != space->dim())
    fail(ErrorKind::MalformedInput, "basepoint dimension does not match the space");
  double n2 = euclidean_norm2<Cx>(basepoint);
  if (n2 == 0) fail(ErrorKind::MalformedInput, "basepoint is zero");
  Cx qq = form_product_c<Cx>(*space, basepoint, basepoint);
  double hh = hodge_norm<Cx>(*space, basepoint);
  if (std::abs(qq) > eps * n2 || hh <= 0)
    fail(ErrorKind::MalformedInput,
         "basepoint must satisfy alpha.alpha = 0 and alpha.conj(alpha) < 0");
  return DomainWitness{std::move(space), std::move(basepoint)};
}

bool same_component(const QuadraticSpace& sp, const CxVec& alpha, const CxVec& beta) {
  if (alpha.size() != sp.dim() || beta.size() != sp.dim())
    fail(ErrorKind::MalformedInput, "vector dimension does not match the space");
  if (frame_degenerate(alpha) || frame_degenerate(beta))
    fail(ErrorKind::MalformedInput, "degenerate real frame (vector is real-proportional)");
  double det = frame_pairing(sp, alpha, beta).determinant();
  if (det == 0)
    fail(ErrorKind::MalformedInput, "frames pair degenerately; inputs are not domain points");
  return det > 0;
}

bool in_domain(const CxVec& alpha, const DomainWitness& w, double eps) {
  const auto& sp = *w.space;
  double n2 = euclidean_norm2<Cx>(alpha);
  if (n2 == 0) fail(ErrorKind::MalformedInput, "zero vector");
  Cx qq = form_product_c<Cx>(sp, alpha, alpha);
  if (std::abs(qq) >= eps * n2) return false;
  if (hodge_norm<Cx>(sp, alpha) <= 0) return false;
  return same_component(sp, alpha, w.basepoint);
}

TubeChart make_tube_chart(SpacePtr space, RatVec e, RatMat complement) {
  if (sign_of(form_product(*space, e, e)) != 0)
    fail(ErrorKind::MalformedInput, "e is not isotropic");
  Subspace j(space, RatMat(e.transpose()));
  if (j.dim() != 1) fail(ErrorKind::MalformedInput, "e is zero");
  Subspace jperp = orthogonal_complement(j);
  Subspace comp(space, complement);
  if (comp.dim() != complement.rows())
    fail(ErrorKind::MalformedInput, "complement rows are dependent");
  if (!contains(jperp, comp))
    fail(ErrorKind::MalformedInput, "complement does not lie in e^perp");
  if (!(subspace_sum(comp, j) == jperp))
    fail(ErrorKind::MalformedInput, "complement + span{e} must equal e^perp");
  RatMat qgram = complement * space->gram() * complement.transpose();
  return TubeChart{std::move(space), std::move(e), std::move(complement), std::move(qgram)};
}

TubeChart make_tube_chart(SpacePtr space, RatVec e) {
  Subspace j(space, RatMat(e.transpose()));
  if (j.dim() != 1 || sign_of(form_product(*space, e, e)) != 0)
    fail(ErrorKind::MalformedInput, "e must be a nonzero isotropic vector");
  Subspace jperp = orthogonal_complement(j);
  const RatMat& rows = jperp.basis();
  auto coeffs = try_solve(RatMat(rows.transpose()), e);
  if (!coeffs) throw std::logic_error("e not contained in e^perp");
  Eigen::Index drop = -1;
  for (Eigen::Index i = 0; i < coeffs->size(); ++i)
    if (sign_of((*coeffs)(i)) != 0) {
      drop = i;
      break;
    }
  RatMat comp(rows.rows() - 1, rows.cols());
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    if (i != drop) comp.row(r++) = rows.row(i);
  return make_tube_chart(std::move(space), std::move(e), std::move(comp));
}

namespace {

template <class S>
TubePoint<typename ScalarOps<S>::Real> tube_coords_impl(const TubeChart& chart,
                                                        const DenseVec<S>& alpha,
                                                        double eps) {
  using Real = typename ScalarOps<S>::Real;
  const auto& sp = *chart.space;
  if (alpha.size() != sp.dim())
    fail(ErrorKind::MalformedInput, "vector dimension does not match the space");
  S a = form_product_c<S>(sp, alpha, promote_vector<S>(chart.e));
  bool outside;
  if constexpr (std::is_same_v<S, GaussQ>)
    outside = a.is_zero();
  else
    outside = std::abs(a) * std::abs(a) <= eps * eps * euclidean_norm2<S>(alpha);
  if (outside)
    fail(ErrorKind::OutsideChart, "alpha pairs to zero with e (alpha lies in e^perp)");
  DenseVec<Real> lift(alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i)
    lift(i) = ScalarOps<S>::imag(alpha(i) / a);
  // Split the lift as sum of complement rows plus a multiple of e.
  const Eigen::Index k = chart.complement.rows();
  DenseVec<Real> coords(k);
  if constexpr (std::is_same_v<Real, Rational>) {
    RatMat sys(sp.dim(), k + 1);
    sys.leftCols(k) = chart.complement.transpose();
    sys.col(k) = chart.e;
    auto sol = try_solve(sys, lift);
    if (!sol) throw std::logic_error("tube lift escaped e^perp");
    coords = sol->head(k);
  } else {
    Eigen::MatrixXd sys(sp.dim(), k + 1);
    for (Eigen::Index i = 0; i < sp.dim(); ++i) {
      for (Eigen::Index j = 0; j < k; ++j) sys(i, j) = to_double(chart.complement(j, i));
      sys(i, k) = to_double(chart.e(i));
    }
    Eigen::VectorXd sol = sys.completeOrthogonalDecomposition().solve(lift);
    coords = sol.head(k);
  }
  Real norm(0);
  const RatMat& g = sp.gram();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (sign_of(g(i, j)) == 0) continue;
      if constexpr (std::is_same_v<Real, Rational>)
        norm += lift(i) * g(i, j) * lift(j);
      else
        norm += lift(i) * to_double(g(i, j)) * lift(j);
    }
  return TubePoint<Real>{std::move(coords), std::move(lift), std::move(norm)};
}

}  // namespace

TubePoint<double> tube_coords(const TubeChart& chart, const CxVec& alpha, double eps) {
  return tube_coords_impl<Cx>(chart, alpha, eps);
}

TubePoint<Rational> tube_coords_exact(const TubeChart& chart, const GaussVec& alpha) {
  return tube_coords_impl<GaussQ>(chart, alpha, 0.0);
}

PeriodSampleSet make_period_samples(MonodromyOperator monodromy,
                                    std::vector<PeriodSample> samples, double eps) {
  const auto& sp = *monodromy.space();
  CxMat t = promote_matrix<Cx>(monodromy.matrix());
  for (const auto& s : samples) {
    if (s.alpha.size() != sp.dim())
      fail(ErrorKind::MalformedInput, "sample dimension does not match the space");
    if (s.w.imag() <= 0)
      fail(ErrorKind::MalformedInput, "sample parameter must lie in the upper half-plane");
  }
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = 0; j < samples.size(); ++j) {
      if (i == j) continue;
      Cx dw = samples[j].w - samples[i].w;
      if (std::abs(dw - Cx(1, 0)) < eps) {
        CxVec expect = t * samples[i].alpha;
        double err = (samples[j].alpha - expect).norm();
        if (err > eps * (1.0 + expect.norm()))
          fail(ErrorKind::InconsistentSamples,
               "samples at w and w+1 do not satisfy P(w+1) = T P(w)");
      }
    }
  return PeriodSampleSet{std::move(monodromy), std::move(samples)};
}

std::vector<UntwistedSample> untwist(const PeriodSampleSet& ps, const NilpotentData& nd,
                                     double eps) {
  const auto& sp = *ps.monodromy.space();
  if (!same_space(nd.space, ps.monodromy.space()))
    fail(ErrorKind::AmbientMismatch, "nilpotent data and samples live in different spaces");
  {
    RatMat expn = RatMat::Identity(sp.dim(), sp.dim()) + nd.n +
                  RatMat(nd.n * nd.n) / Rational(2);
    if (expn != ps.monodromy.matrix())
      fail(ErrorKind::MalformedInput, "nilpotent data does not match the sample monodromy");
  }
  std::vector<UntwistedSample> out;
  out.reserve(ps.samples.size());
  for (const auto& smp : ps.samples) {
    Cx s = std::exp(Cx(0, kTau) * smp.w);
    CxMat inv = one_param<Cx>(nd, Cx(-smp.w));
    out.push_back(UntwistedSample{s, inv * smp.alpha});
  }
  // Single-valuedness: equal s (deck-equivalent w) must give equal phi.
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (std::abs(out[i].s - out[j].s) > eps * (1.0 + std::abs(out[i].s))) continue;
      double err = (out[i].phi - out[j].phi).norm();
      if (err > std::sqrt(eps) * (1.0 + out[i].phi.norm()))
        fail(ErrorKind::InconsistentSamples,
             "deck-equivalent samples untwist to different values");
    }
  return out;
}

LimitLineResult limit_line(const PeriodSampleSet& ps, const NilpotentData& nd,
                           const LimitLineOptions& opts) {
  std::vector<UntwistedSample> pts = untwist(ps, nd);
  if (pts.empty()) fail(ErrorKind::MalformedInput, "no samples");
  const Eigen::Index m = static_cast<Eigen::Index>(pts.size());
  const Eigen::Index d = pts[0].phi.size();
  int degree = std::max(0, opts.degree);
  std::vector<std::string> diagnostics;
  if (degree + 1 > m) {
    degree = static_cast<int>(m) - 1;
    diagnostics.push_back("degree reduced to " + std::to_string(degree) +
                          " (only " + std::to_string(m) + " samples)");
  }
  CxMat vand(m, degree + 1);
  CxMat values(m, d);
  for (Eigen::Index i = 0; i < m; ++i) {
    Cx p(1, 0);
    for (int k = 0; k <= degree; ++k) {
      vand(i, k) = p;
      p *= pts[static_cast<size_t>(i)].s;
    }
    values.row(i) = pts[static_cast<size_t>(i)].phi.transpose();
  }
  CxMat coeff = vand.completeOrthogonalDecomposition().solve(values);
  CxVec f = coeff.row(0).transpose();
  double fnorm = f.norm();
  if (fnorm == 0) fail(ErrorKind::NoConvergence, "extrapolated limit vanishes");
  double residual = 0;
  CxMat misfit = vand * coeff - values;
  for (Eigen::Index i = 0; i < m; ++i)
    residual = std::max(residual, misfit.row(i).norm() / fnorm);
  if (residual > opts.residual_tolerance) {
    std::ostringstream os;
    os << "extrapolation residual " << residual << " exceeds tolerance "
       << opts.residual_tolerance << " (degree " << degree << ", " << m << " samples)";
    fail(ErrorKind::NoConvergence, os.str());
  }
  f /= fnorm;
  double maxabs = 0;
  for (Eigen::Index i = 0; i < d; ++i) maxabs = std::max(maxabs, std::abs(f(i)));
  for (Eigen::Index i = 0; i < d; ++i)
    if (std::abs(f(i)) > 1e-8 * maxabs) {
      f *= std::conj(f(i)) / std::abs(f(i));
      break;
    }
  return LimitLineResult{std::move(f), residual, degree, std::move(diagnostics)};
}

OrthogonalityReport check_limit_orthogonality(const CxVec& f_lim, const Subspace& v,
                                              double tol) {
  const auto& sp = *v.space();
  double fnorm = f_lim.norm();
  if (fnorm == 0) fail(ErrorKind::MalformedInput, "zero limit vector");
  OrthogonalityReport rep;
  rep.tolerance = tol;
  for (Eigen::Index i = 0; i < v.dim(); ++i) {
    CxVec row = promote_vector<Cx>(RatVec(v.basis().row(i).transpose()));
    double p = std::abs(form_product_c<Cx>(sp, row, f_lim)) / fnorm;
    rep.max_pairing = std::max(rep.max_pairing, p);
  }
  rep.pass = rep.max_pairing <= tol;
  return rep;
}

LimitMhs limit_mhs(const Subspace& v, const CxVec& f, double eps) {
  SubspaceClassification cls = classify_subspace(v);
  LimitMhs out{cls, 0, static_cast<int>(cls.nilspace.dim()), true,
               cls.type != SubspaceType::Type1};
  if (cls.nilspace.dim() > 0) {
    double fnorm = f.norm();
    if (fnorm == 0) fail(ErrorKind::MalformedInput, "zero Hodge line representative");
    double best = 0;
    for (Eigen::Index i = 0; i < cls.nilspace.dim(); ++i) {
      CxVec row = promote_vector<Cx>(RatVec(cls.nilspace.basis().row(i).transpose()));
      best = std::max(best,
                      std::abs(form_product_c<Cx>(*v.space(), row, f)) / fnorm);
    }
    out.f_nonzero_on_v0 = best > eps;
  }
  return out;
}

}  // namespace typeiv
