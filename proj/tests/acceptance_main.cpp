// Acceptance suite: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line each.  Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "commands.hpp"
#include "test_util.hpp"
#include "typeiv/arrangement.hpp"
#include "typeiv/geomclass.hpp"

using namespace typeiv;
using testutil::orthogonalize_against;
using testutil::random_isometry;
using testutil::rnd_rat;
using testutil::rnd_vec;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(int id, const char* text, bool pass) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, text);
  if (!pass) ++failures;
}

bool guarded(const std::function<bool()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    notes.push_back(e.what());
    return false;
  }
}

RatMat pair_nilpotent(const QuadraticSpace& sp, const RatVec& e, const RatVec& u) {
  RatVec ge = sp.gram() * e, gu = sp.gram() * u;
  return RatMat(u * ge.transpose() - e * gu.transpose());
}

GaussQ rnd_gauss(std::mt19937_64& rng, int radius, int max_den = 2) {
  return GaussQ(rnd_rat(rng, radius, max_den), rnd_rat(rng, radius, max_den));
}

GaussVec rnd_gauss_vec(std::mt19937_64& rng, Eigen::Index d, int radius, int max_den = 2) {
  GaussVec v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = rnd_gauss(rng, radius, max_den);
  return v;
}

// ---- criterion 1: tube integral --------------------------------------------

bool criterion_tube() {
  auto start = std::chrono::steady_clock::now();
  cli::Options o;
  o.points = 128;
  auto out = cli::run_command("tube-integral", cli::Json(), o);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.exit_code != 0) return false;
  double re = out.report["payload"]["value"][0].get<double>();
  double im = out.report["payload"]["value"][1].get<double>();
  const double two_pi = 2.0 * std::numbers::pi;
  double err = std::min(std::hypot(re, im - two_pi), std::hypot(re, im + two_pi));
  return err <= 1e-8 && secs < 5.0;
}

// ---- criterion 2: the rank-2 lattice report ---------------------------------

bool criterion_gauss() {
  auto start = std::chrono::steady_clock::now();
  GaussLatticeReport rep = gauss_lattice_report();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = rep.signature == Signature{0, 2, 0};
  ok = ok && rep.g_squared_is_minus_one;
  ok = ok && rep.discriminant_order == 4;
  ok = ok && rep.isotropic_classes.empty() && !rep.has_even_overlattice;
  return ok && secs < 1.0;
}

// ---- criterion 3: transvection identities, 200 exact trials ----------------

bool criterion_transvections() {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    int extra = trial % 5;  // d = 4..8
    auto sp = standard_space(2, extra);
    const Eigen::Index d = sp->dim();
    GaussMat g = promote_matrix<GaussQ>(sp->gram());
    RatVec e0 = RatVec::Zero(d), e1 = RatVec::Zero(d), dual = RatVec::Zero(d);
    e0(0) = 1;
    e1(2) = 1;
    dual(1) = 1;  // e0.dual = 1
    GaussVec alpha = rnd_gauss_vec(rng, d, 3);
    {
      GaussQ tau = rnd_gauss(rng, 3);
      GaussMat m = psi_tau<GaussQ>(*sp, e0, e1, tau);
      if (GaussMat(m.transpose() * g * m) != g) return false;
      GaussVec image = m * alpha;
      GaussQ lhs = herm_product_c<GaussQ>(*sp, image, image);
      Rational drop = 4 * tau.b * oriented_plane_pairing<GaussQ>(*sp, alpha, e0, e1);
      if (lhs != herm_product_c<GaussQ>(*sp, alpha, alpha) - GaussQ(drop)) return false;
    }
    {
      GaussVec f = rnd_gauss_vec(rng, d, 3);
      GaussQ fe = form_product_c<GaussQ>(*sp, f, promote_vector<GaussQ>(e0));
      GaussVec dual_c = promote_vector<GaussQ>(dual);
      for (Eigen::Index i = 0; i < d; ++i) f(i) -= fe * dual_c(i);
      GaussMat m = psi_ef<GaussQ>(*sp, e0, f);
      if (GaussMat(m.transpose() * g * m) != g) return false;
      GaussVec image = m * alpha;
      GaussQ lhs = herm_product_c<GaussQ>(*sp, image, image);
      RatVec imf(d);
      for (Eigen::Index i = 0; i < d; ++i) imf(i) = f(i).b;
      GaussQ ae = form_product_c<GaussQ>(*sp, alpha, promote_vector<GaussQ>(e0));
      GaussQ cross = form_product_c<GaussQ>(*sp, alpha, promote_vector<GaussQ>(imf));
      Rational lin = -4 * imag_part(ae * conj(cross));
      Rational quad = 2 * field_norm(ae) * form_product(*sp, imf, imf);
      if (lhs != herm_product_c<GaussQ>(*sp, alpha, alpha) + GaussQ(lin + quad))
        return false;
    }
  }
  return true;
}

// ---- criterion 4: one-parameter group, 200 exact trials ---------------------

bool criterion_one_param() {
  auto sp = standard_space(2, 1);
  std::mt19937_64 rng(103);
  std::vector<NilpotentData> cases;
  cases.push_back(classify_nilpotent(sp, RatMat::Zero(5, 5)));
  cases.push_back(classify_nilpotent(
      sp, pair_nilpotent(*sp, rat_vec_from_longs({1, 0, 0, 0, 0}),
                         rat_vec_from_longs({0, 0, 1, 0, 0}))));
  cases.push_back(classify_nilpotent(
      sp, pair_nilpotent(*sp, rat_vec_from_longs({1, 0, 0, 0, 0}),
                         rat_vec_from_longs({0, 0, 1, -1, 0}))));
  for (int trial = 0; trial < 200; ++trial) {
    const NilpotentData& nd = cases[static_cast<size_t>(trial % 3)];
    Rational w1 = rnd_rat(rng, 6, 3), w2 = rnd_rat(rng, 6, 3);
    RatMat a = one_param<Rational>(nd, w1), b = one_param<Rational>(nd, w2);
    if (RatMat(a * b) != one_param<Rational>(nd, Rational(w1 + w2))) return false;
    if (RatMat(a.transpose() * sp->gram() * a) != sp->gram()) return false;
  }
  // exact log/exp round trip in all three cases
  for (const auto& nd : cases) {
    MonodromyOperator t(sp, one_param<Rational>(nd, Rational(1)));
    if (log_unipotent(t) != nd.n) return false;
  }
  return true;
}

// ---- criterion 5: weight filtrations vs the generic oracle -----------------

bool criterion_filtrations() {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    int extra = (trial % 4) + 1;  // d = 5,6,7,8 and 10 below
    if (trial % 10 == 9) extra = 6;  // d = 10
    auto sp = standard_space(2, extra);
    const Eigen::Index d = sp->dim();
    RatVec e = RatVec::Zero(d), u = RatVec::Zero(d);
    e(0) = 1;
    u(2) = 1;
    if (trial % 2) u(3) = -1;  // case III: u.u = -2
    RatMat s = random_isometry(sp, rng);
    RatMat n = pair_nilpotent(*sp, RatVec(s * e), RatVec(s * u));
    NilpotentData nd = classify_nilpotent(sp, n);
    if (nd.kind != (trial % 2 ? DegenerationCase::III : DegenerationCase::II))
      return false;
    WeightFiltration wf = weight_filtration(nd);
    // generic Jacobson-Morozov: W_{-2} = im N^2, W_{-1} = im N ^ ker N,
    // W_0 = ker N + im N, W_1 = ker N^2, W_2 = H
    RatMat n2 = n * n;
    Subspace im(sp, RatMat(n.transpose()));
    Subspace im2(sp, RatMat(n2.transpose()));
    Subspace ker(sp, kernel(n));
    Subspace ker2(sp, kernel(RatMat(n2)));
    std::map<int, Subspace> oracle;
    oracle.emplace(-2, im2);
    oracle.emplace(-1, subspace_intersect(im, ker));
    oracle.emplace(0, subspace_sum(ker, im));
    oracle.emplace(1, ker2);
    oracle.emplace(2, Subspace::full(sp));
    for (const auto& [k, sub] : wf.steps) {
      auto it = oracle.find(k);
      if (it == oracle.end() || !(sub == it->second)) return false;
    }
  }
  return true;
}

// ---- criterion 6: limit periods on synthetic families ----------------------

bool criterion_limit_periods() {
  auto sp = standard_space(2, 1);
  RatVec x = rat_vec_from_longs({1, -1, 0, 0, 0});
  RatVec y = rat_vec_from_longs({0, 0, 1, -1, 0});
  CxVec a0 = promote_vector<Cx>(x) + Cx(0, 1) * promote_vector<Cx>(y);
  const double tau = 2.0 * std::numbers::pi;
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 6; ++trial) {
    RatVec e = rat_vec_from_longs({1, 0, 0, 0, 0});
    RatVec u = (trial % 2) ? rat_vec_from_longs({0, 0, 1, -1, 0})
                           : rat_vec_from_longs({0, 0, 1, 0, 0});
    RatMat n = pair_nilpotent(*sp, e, u);
    NilpotentData nd = classify_nilpotent(sp, n);
    // V inside ker N and orthogonal to the limit frame
    Subspace kerN(sp, kernel(n));
    Subspace frame(sp, RatMat((RatMat(2, 5) << x.transpose(), y.transpose()).finished()));
    Subspace v = subspace_intersect(kerN, orthogonal_complement(frame));
    if (v.dim() == 0) return false;
    CxVec beta(5);
    for (Eigen::Index i = 0; i < 5; ++i)
      beta(i) = Cx(to_double(rnd_rat(rng, 2, 2)), to_double(rnd_rat(rng, 2, 2)));
    std::vector<PeriodSample> samples;
    double norm_small = 0, norm_large = 0;
    for (int k = 2; k <= 6; ++k) {
      Cx w(0.13 * k, k * std::log(10.0) / tau);  // |s| = 10^{-k}
      Cx s = std::exp(Cx(0, tau) * w);
      CxVec alpha = one_param<Cx>(nd, w) * CxVec(a0 + s * beta);
      if (k == 2) norm_small = hodge_norm<Cx>(*sp, alpha);
      if (k == 6) norm_large = hodge_norm<Cx>(*sp, alpha);
      samples.push_back(PeriodSample{w, alpha});
    }
    if (!(norm_large > 4 * norm_small)) return false;  // divergent Hodge norm
    auto ps = make_period_samples(MonodromyOperator(sp, one_param<Rational>(nd, Rational(1))),
                                  std::move(samples));
    LimitLineResult r = limit_line(ps, nd);
    CxVec a0n = a0 / a0.norm();
    Cx phase = a0n.dot(r.f_lim);
    if ((r.f_lim - phase * a0n).norm() > 1e-6) return false;
    OrthogonalityReport rep = check_limit_orthogonality(r.f_lim, v, 1e-8);
    if (!rep.pass) return false;
  }
  return true;
}

// ---- criterion 7: subspace classification fixtures -------------------------

bool criterion_classification() {
  auto sp5 = standard_space(2, 1);
  auto sp6 = standard_space(2, 2);
  std::mt19937_64 rng(113);
  struct Fixture {
    Subspace v;
    SubspaceType expect;
  };
  auto sub5 = [&](std::initializer_list<std::initializer_list<long>> rows) {
    return Subspace(sp5, rat_mat_from_longs(rows));
  };
  auto sub6 = [&](std::initializer_list<std::initializer_list<long>> rows) {
    return Subspace(sp6, rat_mat_from_longs(rows));
  };
  std::vector<Fixture> fixtures;
  // type 1: positive definite of dimensions 1..3
  fixtures.push_back({sub5({{0, 0, 0, 0, 1}}), SubspaceType::Type1});
  fixtures.push_back({sub5({{1, 1, 0, 0, 0}}), SubspaceType::Type1});
  fixtures.push_back({sub5({{1, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}), SubspaceType::Type1});
  fixtures.push_back(
      {sub5({{1, 1, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}}), SubspaceType::Type1});
  // type 2: complements of isotropic planes (the lemma's tight shape)
  fixtures.push_back({orthogonal_complement(sub5({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}})),
                      SubspaceType::Type2});
  fixtures.push_back({orthogonal_complement(sub5({{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}})),
                      SubspaceType::Type2});
  fixtures.push_back({orthogonal_complement(sub6({{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}})),
                      SubspaceType::Type2});
  {
    RatMat s = random_isometry(sp5, rng);
    RatMat rows(2, 5);
    rows.row(0) = (s * rat_vec_from_longs({1, 0, 0, 0, 0})).transpose();
    rows.row(1) = (s * rat_vec_from_longs({0, 0, 1, 0, 0})).transpose();
    fixtures.push_back(
        {orthogonal_complement(Subspace(sp5, rows)), SubspaceType::Type2});
  }
  // type 3: one-dimensional radical
  fixtures.push_back({sub5({{1, 0, 0, 0, 0}}), SubspaceType::Type3});
  fixtures.push_back({sub5({{1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}}), SubspaceType::Type3});
  fixtures.push_back(
      {sub5({{1, 0, 0, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}}), SubspaceType::Type3});
  fixtures.push_back({sub6({{0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}}), SubspaceType::Type3});
  if (fixtures.size() != 12) return false;
  for (const auto& f : fixtures) {
    SubspaceClassification c = classify_subspace(f.v);
    if (c.type != f.expect || !c.side_condition_holds) return false;
    if (c.type == SubspaceType::Type1) {
      Signature want{static_cast<int>(c.complement.dim()) - 2, 2, 0};
      if (!(c.complement_signature == want)) return false;
    }
    if (c.type == SubspaceType::Type2 && c.complement_signature.positive != 0)
      return false;
  }
  return true;
}

// ---- criterion 8: arrangement combinatorics --------------------------------

Subspace perp_of(const SpacePtr& sp, const RatVec& v) {
  return orthogonal_complement(Subspace(sp, RatMat(v.transpose())));
}

int oracle_chambers(const ConeDecomposition& dec, const std::vector<RatVec>& normals,
                    int radius) {
  const RatMat& comp = dec.chart.complement;
  const RatMat& gq = dec.chart.quotient_gram;
  const auto& sp = *dec.chart.space;
  const Eigen::Index q = comp.rows();
  std::set<std::vector<int>> found;
  std::vector<long> c(static_cast<size_t>(q), -radius);
  RatVec y0;
  bool have_y0 = false, done = false;
  std::vector<RatVec> pts;
  while (!done) {
    RatVec yv(q);
    for (Eigen::Index i = 0; i < q; ++i) yv(i) = Rational(c[static_cast<size_t>(i)]);
    if (sign_of(Rational((yv.transpose() * gq * yv)(0, 0))) < 0) {
      if (!have_y0) {
        y0 = yv;
        have_y0 = true;
      }
      pts.push_back(yv);
    }
    done = true;
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] < radius) {
        ++c[i];
        std::fill(c.begin(), c.begin() + static_cast<long>(i), -radius);
        done = false;
        break;
      }
  }
  for (const auto& yv : pts) {
    if (sign_of(Rational((yv.transpose() * gq * y0)(0, 0))) >= 0) continue;
    RatVec lift = comp.transpose() * yv;
    std::vector<int> signs;
    bool on_wall = false;
    for (const auto& nv : normals) {
      int s = sign_of(form_product(sp, lift, nv));
      if (s == 0) on_wall = true;
      signs.push_back(s);
    }
    if (!on_wall) found.insert(signs);
  }
  return static_cast<int>(found.size());
}

bool criterion_arrangement() {
  auto sp5 = standard_space(2, 1);
  auto sp6 = standard_space(2, 2);
  RatVec e5 = rat_vec_from_longs({1, 0, 0, 0, 0});
  RatVec e6 = rat_vec_from_longs({1, 0, 0, 0, 0, 0});
  struct Fixture {
    SpacePtr sp;
    std::vector<RatVec> normals;
    RatVec e;
  };
  std::vector<Fixture> fixtures;
  fixtures.push_back({sp5, {}, e5});
  fixtures.push_back({sp5, {rat_vec_from_longs({0, 0, 0, 0, 1})}, e5});
  fixtures.push_back(
      {sp5, {rat_vec_from_longs({0, 0, 0, 0, 1}), rat_vec_from_longs({0, 0, 1, 1, 0})}, e5});
  fixtures.push_back({sp5,
                      {rat_vec_from_longs({0, 0, 0, 0, 1}),
                       rat_vec_from_longs({0, 0, 1, 1, 0}),
                       rat_vec_from_longs({0, 0, 1, 1, 1})},
                      e5});
  fixtures.push_back({sp6,
                      {rat_vec_from_longs({0, 0, 0, 0, 1, 0}),
                       rat_vec_from_longs({0, 0, 0, 0, 0, 1}),
                       rat_vec_from_longs({0, 0, 1, 1, 1, 0}),
                       rat_vec_from_longs({0, 0, 1, 1, 0, -1})},
                      e6});
  for (const auto& f : fixtures) {
    std::vector<Subspace> hs;
    for (const auto& nv : f.normals) hs.push_back(perp_of(f.sp, nv));
    auto arr = make_arrangement(f.sp, hs);
    ConeDecomposition dec = cone_decomposition(arr, f.e);
    int chambers = 0;
    for (const auto& c : dec.cells)
      if (c.dim == dec.chart.complement.rows()) ++chambers;
    if (chambers != oracle_chambers(dec, f.normals, 5)) return false;
    // every witness realizes its sign vector under exact evaluation
    for (const auto& c : dec.cells) {
      int zeros_claimed = 0, zeros_seen = 0;
      RatVec lift = dec.chart.complement.transpose() * c.witness;
      for (size_t i = 0; i < c.signs.size(); ++i) {
        if (c.signs[i] == 0) ++zeros_claimed;
        if (sign_of(form_product(*f.sp, lift, f.normals[dec.relevant[i]])) == 0)
          ++zeros_seen;
      }
      if (zeros_claimed != zeros_seen) return false;
    }
  }

  // golden posets
  {
    StratumPoset p = strata_poset(make_arrangement(sp5, {}), {});
    if (p.nodes.size() != 1 || !p.cover_relations.empty()) return false;
  }
  {
    IsotropicDatum line = make_isotropic(
        IsotropicKind::Line, Subspace(sp5, rat_mat_from_longs({{1, 0, 0, 0, 0}})));
    IsotropicDatum plane = make_isotropic(
        IsotropicKind::Plane,
        Subspace(sp5, rat_mat_from_longs({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}})));
    StratumPoset p = strata_poset(make_arrangement(sp5, {}), {line, plane});
    if (p.nodes.size() != 3 || p.cover_relations.size() != 2) return false;
  }
  {
    Subspace h = perp_of(sp5, rat_vec_from_longs({0, 0, 0, 0, 1}));
    IsotropicDatum line = make_isotropic(
        IsotropicKind::Line, Subspace(sp5, rat_mat_from_longs({{1, 0, 0, 0, 0}})));
    IsotropicDatum plane = make_isotropic(
        IsotropicKind::Plane,
        Subspace(sp5, rat_mat_from_longs({{1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}})));
    StratumPoset p = strata_poset(make_arrangement(sp5, {h}), {plane, line});
    if (p.nodes.size() != 6 || p.cover_relations.size() != 5) return false;
    int interior = -1, k1 = -1, k2 = -1, face = -1;
    std::vector<int> chambers;
    for (int i = 0; i < 6; ++i) {
      const auto& nnode = p.nodes[static_cast<size_t>(i)];
      switch (nnode.tag) {
        case StratumTag::Interior: interior = i; break;
        case StratumTag::K1: k1 = i; break;
        case StratumTag::K2: k2 = i; break;
        case StratumTag::Sigma:
          if (nnode.cell_dim == 3)
            chambers.push_back(i);
          else
            face = i;
          break;
      }
    }
    if (interior < 0 || k1 < 0 || k2 < 0 || face < 0 || chambers.size() != 2)
      return false;
    std::set<std::pair<int, int>> covers(p.cover_relations.begin(),
                                         p.cover_relations.end());
    std::set<std::pair<int, int>> expect = {
        {interior, k2}, {k2, face}, {face, k1}, {face, chambers[0]},
        {face, chambers[1]}};
    if (covers != expect) return false;
  }

  // ball stratifications never contain type-3 analogues
  RatMat rot = rat_mat_from_longs({{0, -1}, {1, 0}});
  {
    auto sp = QuadraticSpace::create(diag_gram({2, 2, -2, -2}));
    EigenspaceData chi = eigenspace_chi(sp, direct_sum(rot, rot), 4);
    ChiSubspaceData liner{rat_mat_from_longs({{1, 1}}), RatMat::Zero(1, 2)};
    BallPoset p = ball_strata(chi, {}, {liner});
    for (const auto& nnode : p.nodes)
      if (nnode.tag != StratumTag::Interior && nnode.tag != StratumTag::K1 &&
          nnode.tag != StratumTag::K2)
        return false;
  }
  {
    auto sp = QuadraticSpace::create(diag_gram({2, 2, 2, 2, -2, -2}));
    EigenspaceData chi = eigenspace_chi(sp, direct_sum(direct_sum(rot, rot), rot), 4);
    ChiSubspaceData h{rat_mat_from_longs({{0, 1, 0}, {0, 0, 1}}), RatMat::Zero(2, 3)};
    BallPoset p = ball_strata(chi, {h}, {});
    if (p.nodes.size() != 2 || p.nodes[1].tag != StratumTag::K1) return false;
    for (const auto& nnode : p.nodes)
      if (nnode.tag == StratumTag::Sigma) return false;
  }
  return true;
}

// ---- criterion 9: classifier table ------------------------------------------

bool criterion_classifiers() {
  for (int w = 0; w <= 2; ++w)
    if (boundary_pair_type(w) != w + 1) return false;
  KulikovFiber point{{ComponentKind::K3}, DualComplex::Point, DoubleCurves::None};
  KulikovFiber chain{{ComponentKind::Rational, ComponentKind::EllipticRuled,
                      ComponentKind::Rational},
                     DualComplex::Interval, DoubleCurves::SmoothGenusOne};
  KulikovFiber sphere{{ComponentKind::Rational, ComponentKind::Rational,
                       ComponentKind::Rational},
                      DualComplex::TriangulatedTwoSphere, DoubleCurves::RationalCycles};
  return kulikov_classify(point) == 1 && kulikov_classify(chain) == 2 &&
         kulikov_classify(sphere) == 3;
}

// ---- criterion 10: hypothesis checkers --------------------------------------

bool criterion_checkers() {
  auto sp5 = standard_space(2, 1);
  auto sp6 = standard_space(2, 2);
  // positive codim-2 fixture
  {
    auto arr = make_arrangement(
        sp6, {perp_of(sp6, rat_vec_from_longs({0, 0, 0, 0, 1, 0})),
              perp_of(sp6, rat_vec_from_longs({0, 0, 0, 0, 0, 1}))});
    Codim2Report rep = codim2_criterion(arr, {});
    if (!rep.pass || !rep.bad.empty()) return false;
  }
  // negative fixture: a totally isotropic 2-dim intersection, with witness
  {
    auto arr = make_arrangement(
        sp5, {perp_of(sp5, rat_vec_from_longs({0, 0, 0, 0, 1})),
              perp_of(sp5, rat_vec_from_longs({1, 0, 1, 0, 1})),
              perp_of(sp5, rat_vec_from_longs({1, 0, -1, 0, 1}))});
    Codim2Report rep = codim2_criterion(arr, {});
    if (rep.pass || rep.bad.empty()) return false;
    const auto& bad = rep.bad[0];
    if (bad.w.dim() != 2) return false;
    if (sign_of(form_product(*sp5, bad.witness, bad.witness)) > 0) return false;
  }
  // a dim-4 ambient always fails the dimension clause
  {
    auto sp4 = QuadraticSpace::create(direct_sum(hyperbolic_gram(), hyperbolic_gram()));
    auto arr = make_arrangement(sp4, {perp_of(sp4, rat_vec_from_longs({1, 1, 0, 0}))});
    Codim2Report rep = codim2_criterion(arr, {});
    if (rep.dim_ok || rep.pass) return false;
  }
  // invar hypothesis: positive and negative fixtures
  {
    auto arr = make_arrangement(sp5, {perp_of(sp5, rat_vec_from_longs({0, 0, 1, 1, 0})),
                                      perp_of(sp5, rat_vec_from_longs({0, 0, 2, 1, 0})),
                                      perp_of(sp5, rat_vec_from_longs({0, 0, 0, 0, 1}))});
    InvarReport rep = invar_hypothesis(arr);
    if (!rep.pass) return false;
  }
  {
    auto arr = make_arrangement(sp5, {perp_of(sp5, rat_vec_from_longs({1, 1, 0, 0, 0})),
                                      perp_of(sp5, rat_vec_from_longs({0, 0, 1, 1, 0})),
                                      perp_of(sp5, rat_vec_from_longs({0, 0, 0, 0, 1}))});
    InvarReport rep = invar_hypothesis(arr);
    if (rep.pass || rep.failing.empty()) return false;
    const auto& item = rep.intersections[static_cast<size_t>(rep.failing[0])];
    if (!item.nonisotropic || item.takes_positive) return false;
    if (item.w.dim() != 2) return false;  // the witness subspace itself
  }
  return true;
}

}  // namespace

int main() {
  report(1, "tube integral: 128x128 within 1e-8 of +-2*pi*i in under 5 s",
         guarded(criterion_tube));
  report(2, "rank-2 lattice: signature (0,2), g^2 = -1, discriminant (Z/2)^2, no even overlattice",
         guarded(criterion_gauss));
  report(3, "transvection identities exact on 200 random Gaussian-rational inputs, d <= 8",
         guarded(criterion_transvections));
  report(4, "one-parameter group law and form preservation exact, 200 trials, cases I/II/III",
         guarded(criterion_one_param));
  report(5, "closed-form weight filtrations equal the generic oracle on 50 random inputs, d <= 10",
         guarded(criterion_filtrations));
  report(6, "limit lines recover synthetic limits to 1e-6 and pass orthogonality at 1e-8",
         guarded(criterion_limit_periods));
  report(7, "subspace classification side conditions hold on the 12-fixture suite",
         guarded(criterion_classification));
  report(8, "cone cell counts match brute force; golden posets match; no type-3 ball nodes",
         guarded(criterion_arrangement));
  report(9, "boundary type is w(F)+1 and the Kulikov table is 1/2/3",
         guarded(criterion_classifiers));
  report(10, "codim-2 and positivity checkers give correct pass/fail with witnesses",
         guarded(criterion_checkers));
  for (const auto& n : notes) std::fprintf(stderr, "note: %s\n", n.c_str());
  return failures;
}
