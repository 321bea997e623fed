#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "test_util.hpp"

using namespace typeiv;
using testutil::random_isometry;
using testutil::rnd_rat;
using testutil::rnd_vec;

namespace {

SpacePtr uu1() { return standard_space(2, 1); }

// Test-side exponential: the series truncated at the nilpotency order.
RatMat exp_series(const RatMat& n) {
  const Eigen::Index d = n.rows();
  return RatMat(RatMat::Identity(d, d) + n + RatMat(n * n) / Rational(2));
}

RatMat nilpotent_from_pair(const QuadraticSpace& sp, const RatVec& e, const RatVec& u) {
  RatVec ge = sp.gram() * e, gu = sp.gram() * u;
  return RatMat(u * ge.transpose() - e * gu.transpose());
}

struct Pair {
  RatVec e, u;
};

Pair case2_pair(const SpacePtr& sp) {
  return {rat_vec_from_longs({1, 0, 0, 0, 0}), rat_vec_from_longs({0, 0, 1, 0, 0})};
}

Pair case3_pair(const SpacePtr& sp) {
  // u = e3 - e4 has u.u = -2 and u.e = 0
  return {rat_vec_from_longs({1, 0, 0, 0, 0}), rat_vec_from_longs({0, 0, 1, -1, 0})};
}

// Generic Jacobson-Morozov filtration for N^3 = 0, computed from scratch:
// W_{-2} = im N^2, W_{-1} = im N ^ ker N, W_0 = ker N + im N, W_1 = ker N^2.
std::map<int, Subspace> jm_oracle(const SpacePtr& sp, const RatMat& n) {
  RatMat n2 = n * n;
  Subspace im(sp, RatMat(n.transpose()));
  Subspace im2(sp, RatMat(n2.transpose()));
  Subspace ker(sp, kernel(n));
  Subspace ker2(sp, kernel(RatMat(n2)));
  std::map<int, Subspace> w;
  w.emplace(-2, im2);
  w.emplace(-1, subspace_intersect(im, ker));
  w.emplace(0, subspace_sum(ker, im));
  w.emplace(1, ker2);
  w.emplace(2, Subspace::full(sp));
  return w;
}

}  // namespace

TEST_CASE("log of the identity is zero") {
  auto sp = uu1();
  MonodromyOperator m(sp, RatMat::Identity(5, 5));
  CHECK(is_zero_matrix(log_unipotent(m)));
}

TEST_CASE("log/exp round trip, case II") {
  auto sp = uu1();
  auto [e, u] = case2_pair(sp);
  RatMat n = nilpotent_from_pair(*sp, e, u);
  MonodromyOperator m(sp, exp_series(n));
  CHECK(log_unipotent(m) == n);
  CHECK(is_zero_matrix(RatMat(n * n)));
}

TEST_CASE("log/exp round trip, case III has (T-1)^2 != 0") {
  auto sp = uu1();
  auto [e, u] = case3_pair(sp);
  RatMat n = nilpotent_from_pair(*sp, e, u);
  RatMat t = exp_series(n);
  RatMat shift = t - RatMat::Identity(5, 5);
  CHECK_FALSE(is_zero_matrix(RatMat(shift * shift)));
  MonodromyOperator m(sp, t);
  CHECK(log_unipotent(m) == n);
}

TEST_CASE("operators that are not quasi-unipotent of the right kind are rejected") {
  auto sp = uu1();
  RatMat t = RatMat::Identity(5, 5);
  t(0, 0) = 2;
  t(1, 1) = make_rational(1, 2);  // preserves the U-block form, not unipotent
  CHECK_THROWS_AS(MonodromyOperator(sp, t), Error);
  RatMat skew = RatMat::Zero(5, 5);
  skew(0, 2) = 1;
  CHECK_THROWS_AS(MonodromyOperator(sp, RatMat(RatMat::Identity(5, 5) + skew)), Error);
}

TEST_CASE("unipotent_power finds the order of a finite isometry") {
  auto gl = QuadraticSpace::create(diag_gram({-2, -2}));
  RatMat rho = rat_mat_from_longs({{0, -1}, {1, 0}});
  CHECK(unipotent_power(*gl, rho) == 4);
  CHECK(unipotent_power(*gl, RatMat(RatMat::Identity(2, 2))) == 1);
  CHECK_FALSE(unipotent_power(*gl, rho, 3).has_value());
}

TEST_CASE("classify_nilpotent case I") {
  auto sp = uu1();
  NilpotentData nd = classify_nilpotent(sp, RatMat::Zero(5, 5));
  CHECK(nd.kind == DegenerationCase::I);
  CHECK(nd.j.dim() == 0);
  CHECK_FALSE(nd.e.has_value());
}

TEST_CASE("classify_nilpotent case II") {
  auto sp = uu1();
  auto [e, u] = case2_pair(sp);
  RatMat n = nilpotent_from_pair(*sp, e, u);
  NilpotentData nd = classify_nilpotent(sp, n);
  CHECK(nd.kind == DegenerationCase::II);
  CHECK(nd.j.dim() == 2);
  CHECK(nd.j.is_totally_isotropic());
  CHECK(nd.j0 == nd.j);
  CHECK(sign_of(nd.uu) == 0);
  // the extracted pair reproduces N
  CHECK(nilpotent_from_pair(*sp, *nd.e, *nd.u) == n);
  CHECK(sign_of(form_product(*sp, *nd.e, *nd.e)) == 0);
  CHECK(sign_of(form_product(*sp, *nd.e, *nd.u)) == 0);
}

TEST_CASE("classify_nilpotent case III") {
  auto sp = uu1();
  auto [e, u] = case3_pair(sp);
  RatMat n = nilpotent_from_pair(*sp, e, u);
  NilpotentData nd = classify_nilpotent(sp, n);
  CHECK(nd.kind == DegenerationCase::III);
  CHECK(nd.uu == Rational(-2));
  CHECK(nd.j0.dim() == 1);
  CHECK(nd.j0 == Subspace(sp, rat_mat_from_longs({{1, 0, 0, 0, 0}})));
  CHECK_FALSE(is_zero_matrix(RatMat(n * n)));
  // im N^2 = span{e}
  Subspace im2(sp, RatMat(RatMat(n * n).transpose()));
  CHECK(im2 == nd.j0);
}

TEST_CASE("classification is stable under exact isometry conjugation") {
  auto sp = uu1();
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    auto [e, u] = (t % 2) ? case3_pair(sp) : case2_pair(sp);
    RatMat s = random_isometry(sp, rng);
    RatMat n = nilpotent_from_pair(*sp, RatVec(s * e), RatVec(s * u));
    NilpotentData nd = classify_nilpotent(sp, n);
    CHECK(nd.kind == ((t % 2) ? DegenerationCase::III : DegenerationCase::II));
    CHECK(nilpotent_from_pair(*sp, *nd.e, *nd.u) == n);
  }
}

TEST_CASE("rank-4 nilpotents are not of the type IV kind") {
  // two orthogonal rank-2 blocks inside signature (4,2)
  auto sp = QuadraticSpace::create(diag_gram({1, 1, -1, 1, 1, -1}));
  RatVec e1 = rat_vec_from_longs({1, 0, 1, 0, 0, 0});
  RatVec u1 = rat_vec_from_longs({0, 1, 0, 0, 0, 0});
  RatVec e2 = rat_vec_from_longs({0, 0, 0, 1, 0, 1});
  RatVec u2 = rat_vec_from_longs({0, 0, 0, 0, 1, 0});
  RatMat n = nilpotent_from_pair(*sp, e1, u1) + nilpotent_from_pair(*sp, e2, u2);
  CHECK(is_zero_matrix(RatMat(n * n * n)));
  CHECK_THROWS_AS(classify_nilpotent(sp, n), Error);
}

TEST_CASE("ker N equals J^perp in cases II and III") {
  auto sp = uu1();
  for (int which = 0; which < 2; ++which) {
    auto [e, u] = which ? case3_pair(sp) : case2_pair(sp);
    RatMat n = nilpotent_from_pair(*sp, e, u);
    NilpotentData nd = classify_nilpotent(sp, n);
    CHECK(Subspace(sp, kernel(n)) == orthogonal_complement(nd.j));
  }
}

TEST_CASE("one_param group law and form preservation") {
  auto sp = uu1();
  std::mt19937_64 rng(31);
  for (int which = 0; which < 3; ++which) {
    RatMat n;
    if (which == 0)
      n = RatMat::Zero(5, 5);
    else {
      auto [e, u] = (which == 1) ? case2_pair(sp) : case3_pair(sp);
      n = nilpotent_from_pair(*sp, e, u);
    }
    NilpotentData nd = classify_nilpotent(sp, n);
    for (int t = 0; t < 50; ++t) {
      Rational w1 = rnd_rat(rng, 5, 3), w2 = rnd_rat(rng, 5, 3);
      RatMat a = one_param<Rational>(nd, w1);
      RatMat b = one_param<Rational>(nd, w2);
      CHECK(RatMat(a * b) == one_param<Rational>(nd, Rational(w1 + w2)));
      CHECK(RatMat(a.transpose() * sp->gram() * a) == sp->gram());
    }
    // exact Gaussian-rational parameters behave the same way
    GaussQ g1(make_rational(1, 2), Rational(2)), g2(Rational(-1), make_rational(3, 4));
    GaussMat a = one_param<GaussQ>(nd, g1), b = one_param<GaussQ>(nd, g2);
    CHECK(GaussMat(a * b) == one_param<GaussQ>(nd, GaussQ(g1 + g2)));
  }
}

TEST_CASE("one_param at w=1 is the exponential") {
  auto sp = uu1();
  auto [e, u] = case3_pair(sp);
  RatMat n = nilpotent_from_pair(*sp, e, u);
  NilpotentData nd = classify_nilpotent(sp, n);
  CHECK(one_param<Rational>(nd, Rational(0)) == RatMat(RatMat::Identity(5, 5)));
  CHECK(one_param<Rational>(nd, Rational(1)) == exp_series(n));
}

TEST_CASE("weight filtration closed forms") {
  auto sp = uu1();
  SUBCASE("case I is pure of weight zero") {
    WeightFiltration wf = weight_filtration(classify_nilpotent(sp, RatMat::Zero(5, 5)));
    REQUIRE(wf.steps.size() == 1);
    CHECK(wf.steps[0].first == 0);
    CHECK(wf.steps[0].second == Subspace::full(sp));
  }
  SUBCASE("case II") {
    auto [e, u] = case2_pair(sp);
    NilpotentData nd = classify_nilpotent(sp, nilpotent_from_pair(*sp, e, u));
    WeightFiltration wf = weight_filtration(nd);
    REQUIRE(wf.steps.size() == 4);
    CHECK(wf.steps[0] == std::pair(-2, Subspace::zero(sp)));
    CHECK(wf.steps[1] == std::pair(-1, nd.j));
    CHECK(wf.steps[2] == std::pair(0, orthogonal_complement(nd.j)));
    CHECK(wf.steps[3] == std::pair(1, Subspace::full(sp)));
  }
  SUBCASE("case III") {
    auto [e, u] = case3_pair(sp);
    NilpotentData nd = classify_nilpotent(sp, nilpotent_from_pair(*sp, e, u));
    WeightFiltration wf = weight_filtration(nd);
    REQUIRE(wf.steps.size() == 5);
    CHECK(wf.steps[0] == std::pair(-2, nd.j0));
    CHECK(wf.steps[2] == std::pair(0, orthogonal_complement(nd.j0)));
    CHECK(wf.steps[4] == std::pair(2, Subspace::full(sp)));
  }
}

TEST_CASE("weight filtration agrees with the generic Jacobson-Morozov oracle") {
  auto sp = uu1();
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    auto [e, u] = (t % 2) ? case3_pair(sp) : case2_pair(sp);
    RatMat s = random_isometry(sp, rng);
    RatMat n = nilpotent_from_pair(*sp, RatVec(s * e), RatVec(s * u));
    NilpotentData nd = classify_nilpotent(sp, n);
    WeightFiltration wf = weight_filtration(nd);
    auto oracle = jm_oracle(sp, n);
    for (const auto& [k, sub] : wf.steps) {
      auto it = oracle.find(k);
      REQUIRE(it != oracle.end());
      CHECK(sub == it->second);
    }
  }
}

TEST_CASE("filtration steps satisfy N(W_k) in W_{k-2}") {
  auto sp = uu1();
  auto [e, u] = case3_pair(sp);
  RatMat n = nilpotent_from_pair(*sp, e, u);
  NilpotentData nd = classify_nilpotent(sp, n);
  WeightFiltration wf = weight_filtration(nd);
  for (size_t i = 0; i < wf.steps.size(); ++i) {
    Subspace image(sp, RatMat(wf.steps[i].second.basis() * n.transpose()));
    Subspace target = Subspace::zero(sp);
    for (const auto& [k2, sub2] : wf.steps)
      if (k2 <= wf.steps[i].first - 2) target = sub2;
    CHECK(contains(target, image));
  }
}

TEST_CASE("case III polarity: (N^2 a . a) = -(u.u)(a.e)^2") {
  auto sp = uu1();
  auto [e, u] = case3_pair(sp);
  RatMat n = nilpotent_from_pair(*sp, e, u);
  NilpotentData nd = classify_nilpotent(sp, n);
  REQUIRE(sign_of(nd.uu) < 0);  // the polarized sign
  RatMat n2 = n * n;
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    RatVec a = rnd_vec(rng, 5, 4, 2);
    Rational lhs = form_product(*sp, RatVec(n2 * a), a);
    Rational ae = form_product(*sp, a, *nd.e);
    CHECK(lhs == Rational(-nd.uu * ae * ae));
    CHECK(sign_of(lhs) >= 0);  // u.u < 0 forces nonnegativity, zero iff a.e = 0
    CHECK((sign_of(lhs) == 0) == (sign_of(ae) == 0));
  }
}
