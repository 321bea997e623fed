#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "typeiv/geomclass.hpp"

using namespace typeiv;

TEST_CASE("boundary pair type is w(F) + 1") {
  CHECK(boundary_pair_type(0) == 1);
  CHECK(boundary_pair_type(1) == 2);
  CHECK(boundary_pair_type(2) == 3);
  CHECK_THROWS_AS(boundary_pair_type(-1), Error);
  CHECK_THROWS_AS(boundary_pair_type(3), Error);
  for (int t = 1; t <= 3; ++t) CHECK(boundary_pair_type(t - 1) == t);
}

TEST_CASE("singularity labels") {
  CHECK(parse_singularity("A1").kind == SingularityKind::ADE);
  CHECK(parse_singularity("D4").kind == SingularityKind::ADE);
  CHECK(parse_singularity("E8").kind == SingularityKind::ADE);
  CHECK(parse_singularity("Cusp").kind == SingularityKind::Cusp);
  SingularityLabel se = parse_singularity("SimpleElliptic:2");
  CHECK(se.kind == SingularityKind::SimpleElliptic);
  CHECK(se.degree == 2);
  CHECK(parse_singularity("Other:unknown junk").kind == SingularityKind::Other);
  CHECK_THROWS_AS(parse_singularity("E5"), Error);
  CHECK_THROWS_AS(parse_singularity("A0"), Error);
  CHECK_THROWS_AS(parse_singularity("D3"), Error);
  CHECK_THROWS_AS(parse_singularity("flerb"), Error);
}

TEST_CASE("degeneration type from singularities") {
  auto labels = [](std::initializer_list<const char*> names) {
    std::vector<SingularityLabel> out;
    for (const char* n : names) out.push_back(parse_singularity(n));
    return out;
  };
  CHECK(k3_degeneration_type({}) == K3DegenerationClass::FiniteMonodromy);
  CHECK(k3_degeneration_type(labels({"A1", "E6"})) == K3DegenerationClass::FiniteMonodromy);
  CHECK(k3_degeneration_type(labels({"SimpleElliptic:2", "A3"})) ==
        K3DegenerationClass::Type2);
  CHECK(k3_degeneration_type(labels({"Cusp", "SimpleElliptic:1"})) ==
        K3DegenerationClass::Type3);
  CHECK(k3_degeneration_type(labels({"Other"})) == K3DegenerationClass::Unknown);
  // an unrecognized singularity blocks classification even next to a cusp
  CHECK(k3_degeneration_type(labels({"Cusp", "Other"})) == K3DegenerationClass::Unknown);
}

namespace {

KulikovFiber smooth_fiber() {
  return KulikovFiber{{ComponentKind::K3}, DualComplex::Point, DoubleCurves::None};
}

KulikovFiber chain_fiber() {
  return KulikovFiber{{ComponentKind::Rational, ComponentKind::EllipticRuled,
                       ComponentKind::Rational},
                      DualComplex::Interval, DoubleCurves::SmoothGenusOne};
}

KulikovFiber sphere_fiber() {
  return KulikovFiber{{ComponentKind::Rational, ComponentKind::Rational,
                       ComponentKind::Rational, ComponentKind::Rational},
                      DualComplex::TriangulatedTwoSphere, DoubleCurves::RationalCycles};
}

}  // namespace

TEST_CASE("kulikov classification") {
  CHECK(kulikov_classify(smooth_fiber()) == 1);
  CHECK(kulikov_classify(chain_fiber()) == 2);
  CHECK(kulikov_classify(sphere_fiber()) == 3);
  SUBCASE("two-component chains are allowed") {
    KulikovFiber two{{ComponentKind::Rational, ComponentKind::Rational},
                     DualComplex::Interval, DoubleCurves::SmoothGenusOne};
    CHECK(kulikov_classify(two) == 2);
  }
  SUBCASE("violations are reported by rule") {
    KulikovFiber f = chain_fiber();
    f.components[0] = ComponentKind::K3;
    try {
      kulikov_classify(f);
      FAIL("expected a consistency error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("chain ends") != std::string::npos);
    }
    KulikovFiber g = smooth_fiber();
    g.double_curves = DoubleCurves::SmoothGenusOne;
    CHECK_THROWS_AS(kulikov_classify(g), Error);
    KulikovFiber h = sphere_fiber();
    h.components[1] = ComponentKind::EllipticRuled;
    CHECK_THROWS_AS(kulikov_classify(h), Error);
    KulikovFiber one_chain = chain_fiber();
    one_chain.components.resize(1);
    CHECK_THROWS_AS(kulikov_classify(one_chain), Error);
  }
}

TEST_CASE("the two classifiers agree on the canonical cases") {
  CHECK(kulikov_classify(smooth_fiber()) ==
        static_cast<int>(k3_degeneration_type({})));
  CHECK(kulikov_classify(chain_fiber()) ==
        static_cast<int>(k3_degeneration_type({parse_singularity("SimpleElliptic:2")})));
  CHECK(kulikov_classify(sphere_fiber()) ==
        static_cast<int>(k3_degeneration_type({parse_singularity("Cusp")})));
}

TEST_CASE("gauss lattice report") {
  GaussLatticeReport rep = gauss_lattice_report();
  CHECK(rep.signature == Signature{0, 2, 0});
  CHECK(rep.g_squared_is_minus_one);
  CHECK(rep.discriminant_order == 4);
  CHECK(rep.invariant_factors == std::vector<long>{2, 2});
  CHECK(rep.gamma_self_intersection == -2);
  REQUIRE(rep.q_values.size() == 3);
  std::vector<Rational> sorted = rep.q_values;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[0] == Rational(-1));
  CHECK(sorted[1] == make_rational(-1, 2));
  CHECK(sorted[2] == make_rational(-1, 2));
  CHECK(rep.isotropic_classes.empty());
  CHECK_FALSE(rep.has_even_overlattice);
}

TEST_CASE("smith normal form oracle") {
  using IntMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
  SUBCASE("the report's discriminant group matches an independent route") {
    IntMat gz(2, 2);
    gz << Integer(-2), Integer(0), Integer(0), Integer(-2);
    auto inv = smith_invariant_factors(gz);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 2);
    CHECK(inv[0] * inv[1] == 4);  // |det|
  }
  SUBCASE("a non-diagonal example") {
    IntMat m(2, 2);
    m << Integer(2), Integer(1), Integer(0), Integer(2);
    auto inv = smith_invariant_factors(m);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 4);
  }
  SUBCASE("rank deficient") {
    IntMat m(2, 2);
    m << Integer(2), Integer(4), Integer(1), Integer(2);
    auto inv = smith_invariant_factors(m);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == 1);
  }
}

TEST_CASE("tube integral") {
  const double two_pi = 2.0 * std::numbers::pi;
  TubeIntegralResult r = tube_integral_check(1.0, 64);
  CHECK(r.magnitude_error < 1e-8);
  CHECK(std::abs(r.real_part) < 1e-8);
  // purely imaginary of magnitude 2 pi, sign free
  CHECK(std::abs(std::abs(r.value.imag()) - two_pi) < 1e-8);
  SUBCASE("doubling the grid does not make it worse") {
    TubeIntegralResult r2 = tube_integral_check(1.0, 128);
    CHECK(r2.magnitude_error <= std::max(0.5 * r.magnitude_error, 1e-12));
  }
  SUBCASE("the value does not depend on the tube radius") {
    TubeIntegralResult r2 = tube_integral_check(0.37, 64);
    CHECK(std::abs(r2.value - r.value) < 1e-9);
  }
  SUBCASE("too few points are refused") {
    CHECK_THROWS_AS(tube_integral_check(1.0, 8), Error);
    CHECK_THROWS_AS(tube_integral_check(0.0, 64), Error);
  }
}
