#pragma once

#include <string>
#include <vector>

#include "typeiv/qspace.hpp"
#include "typeiv/scalar.hpp"

// Geometric classifiers: boundary-pair type from the weight of the residual
// Hodge line, singularity-based degeneration typing for surfaces with
// trivial dualizing sheaf, the Kulikov central-fiber table, the rank-2
// lattice facts of the worked example, and one numerical contour check.

namespace typeiv {

// type = w(F) + 1 on w(F) in {0,1,2}.
int boundary_pair_type(int weight_of_f);

enum class SingularityKind { ADE, SimpleElliptic, Cusp, Other };

struct SingularityLabel {
  SingularityKind kind = SingularityKind::Other;
  std::string text;  // as parsed, e.g. "A1", "E6", "SimpleElliptic:2"
  int degree = 0;    // simple-elliptic degree, carried as metadata only
};

// "A<n>", "D<n>", "E6|E7|E8", "SimpleElliptic[:d]", "Cusp", "Other[:note]".
SingularityLabel parse_singularity(const std::string& text);

enum class K3DegenerationClass { FiniteMonodromy = 1, Type2 = 2, Type3 = 3, Unknown = 0 };

inline const char* to_string(K3DegenerationClass c) {
  switch (c) {
    case K3DegenerationClass::FiniteMonodromy: return "FiniteMonodromy";
    case K3DegenerationClass::Type2: return "Type2";
    case K3DegenerationClass::Type3: return "Type3";
    case K3DegenerationClass::Unknown: return "Unknown";
  }
  return "?";
}

// Empty list = smooth fiber.  An unrecognized singularity blocks the
// classification; otherwise a cusp wins over simple-elliptic points, and
// rational double points alone keep the monodromy finite.
K3DegenerationClass k3_degeneration_type(const std::vector<SingularityLabel>& sings);

enum class ComponentKind { K3, Rational, EllipticRuled };
enum class DualComplex { Point, Interval, TriangulatedTwoSphere };
enum class DoubleCurves { None, SmoothGenusOne, RationalCycles };

struct KulikovFiber {
  std::vector<ComponentKind> components;
  DualComplex dual_complex = DualComplex::Point;
  DoubleCurves double_curves = DoubleCurves::None;
};

// 1/2/3 for point / interval / two-sphere dual complex; the fiber
// description must pass its consistency rules, violations are reported by
// name.
int kulikov_classify(const KulikovFiber& f);

struct GaussLatticeReport {
  Signature signature;                   // (0,2,0)
  bool g_squared_is_minus_one = false;   // g^2 gamma = -gamma
  long discriminant_order = 0;           // |det| = 4
  std::vector<long> invariant_factors;   // (2,2)
  std::vector<Rational> q_values;        // x.x on the nonzero dual classes
  std::vector<int> isotropic_classes;    // classes with q = 0 mod 2Z (none)
  bool has_even_overlattice = true;
  long gamma_self_intersection = 0;      // -2
};

// Z[i] with the form -2|z|^2: signature, mu_4 action, discriminant form,
// and the absence of proper even overlattices.
GaussLatticeReport gauss_lattice_report();

struct TubeIntegralResult {
  Cx value;
  double magnitude_error = 0;  // | |value| - 2 pi |
  double real_part = 0;        // exact value is purely imaginary
  int points = 0;
};

// Numerically integrates dz' ^ dz'' / (z' - z'')^2 over the tube
// z' - z'' = eps e^{i theta}, z' + z'' = t eps e^{i theta}; the value is
// +-2 pi i and independent of eps.
TubeIntegralResult tube_integral_check(double epsilon, int quadrature_points);

// Smith normal form invariant factors of an integer matrix (used by the
// discriminant computation; also handy as an oracle).
std::vector<Integer> smith_invariant_factors(Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> m);

}  // namespace typeiv
