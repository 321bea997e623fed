#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "typeiv/eigenspace.hpp"
#include "typeiv/period.hpp"
#include "typeiv/qspace.hpp"

// Combinatorics of the arrangement compactification: the index set
// K1 u K2 u (u_J Sigma_J), polyhedral cone cells over isotropic lines with
// exact rational witnesses, the stratum poset, and the checkable
// codimension / positivity hypotheses.
//
// All collections are explicit finite lists (orbit representatives); no
// reduction theory happens here.

namespace typeiv {

struct Arrangement {
  SpacePtr space;
  std::vector<Subspace> hyperplanes;
};

// Requires ambient signature (n,2) with n >= 2; every member of codimension
// one and signature (n-1,2); duplicates rejected.
Arrangement make_arrangement(SpacePtr space, std::vector<Subspace> hyperplanes);

enum class IsotropicKind { Line, Plane };

struct IsotropicDatum {
  IsotropicKind kind;
  Subspace subspace;
};

IsotropicDatum make_isotropic(IsotropicKind kind, Subspace s);

// All distinct intersections of nonempty subsets of members (the whole
// space never appears; members themselves do).
std::vector<Subspace> intersection_closure(const Arrangement& arr);

// Intersections whose orthogonal complement is positive definite.
std::vector<Subspace> build_K1(const Arrangement& arr);

// Common intersection of J^perp with all members containing the isotropic
// plane J; equals J^perp when no member contains J.
Subspace K_J_plane(const Arrangement& arr, const IsotropicDatum& j);

struct ConeOptions {
  std::uint64_t seed = 0;
  int sample_rounds = 48;                  // batches of randomized witness search
  std::optional<RatVec> component_witness; // in complement coordinates
};

struct ConeCell {
  std::vector<int> signs;  // over the relevant hyperplanes: +1 / -1 / 0
  RatVec witness;          // in complement coordinates, exact
  Rational witness_norm;   // y.y at the witness
  int dim = 0;             // dimension of the cell in J^perp/J
  Subspace k_sigma;        // lift of the linear span of the cell
};

struct ConeDecomposition {
  RatVec e;
  TubeChart chart;
  std::vector<Eigen::Index> relevant;  // indices of members containing J
  std::vector<ConeCell> cells;         // chambers and faces, by decreasing dim
};

// Decomposes the chosen component of {y.y < 0} in J^perp/J by the members
// through J = span{e}.  Chambers carry full sign vectors; faces arise by
// zeroing sign entries and are kept when nonempty inside the closed cone.
ConeDecomposition cone_decomposition(const Arrangement& arr, const RatVec& e,
                                     const ConeOptions& opts = {});

enum class StratumTag { Interior, K1, K2, Sigma };

inline const char* to_string(StratumTag t) {
  switch (t) {
    case StratumTag::Interior: return "interior";
    case StratumTag::K1: return "K1";
    case StratumTag::K2: return "K2";
    case StratumTag::Sigma: return "Sigma";
  }
  return "?";
}

struct StratumIndex {
  StratumTag tag;
  Subspace k_sigma;          // the associated subspace (zero for Interior)
  int source_index = -1;     // position in the K1 list / plane list / line list
  int cell_index = -1;       // for Sigma: position in that line's cell list
  std::vector<int> signs;    // for Sigma
  int cell_dim = -1;         // for Sigma
};

struct StratumPoset {
  std::vector<StratumIndex> nodes;
  // Strict order: within one Sigma_J the face relation between cells,
  // elsewhere strict inclusion of the K subspaces (equal subspaces in
  // different families stay incomparable).  Stored as covers.
  std::vector<std::pair<int, int>> cover_relations;  // (lower, upper)
  std::vector<ConeDecomposition> line_decompositions;
};

StratumPoset strata_poset(const Arrangement& arr,
                          const std::vector<IsotropicDatum>& isotropics,
                          const ConeOptions& opts = {});

bool poset_less(const StratumPoset& p, int a, int b);

std::string poset_dot(const StratumPoset& p);

struct Codim2Report {
  bool dim_ok = false;
  int dim_h = 0;
  struct BadIntersection {
    Subspace w;           // 2-dimensional, negative semidefinite
    RatVec witness;       // nonzero vector with w.w <= 0
  };
  std::vector<BadIntersection> bad;
  struct ThinCell {
    int line_index;
    std::vector<int> signs;  // cell with dim K_sigma = 2 (one-dimensional span)
  };
  std::vector<ThinCell> thin_cells;
  bool pass = false;
};

// dim H >= 5 plus positivity of the form on every two-dimensional
// intersection of members; also flags Sigma cells of one-dimensional span.
Codim2Report codim2_criterion(const Arrangement& arr,
                              const std::vector<IsotropicDatum>& isotropics,
                              const ConeOptions& opts = {});

struct InvarReport {
  struct Item {
    Subspace w;
    bool nonisotropic = false;
    bool takes_positive = false;
  };
  std::vector<Item> intersections;  // the 2-dimensional intersections
  std::vector<int> failing;         // indices of nonisotropic negative-semidefinite ones
  bool pass = false;
};

InvarReport invar_hypothesis(const Arrangement& arr);

// --- ball quotient variant --------------------------------------------------

// A subspace of the chi eigenspace, rows c0 + zeta*c1 in chi coordinates.
struct ChiSubspaceData {
  RatMat c0;
  RatMat c1;
};

struct BallNode {
  StratumTag tag;  // Interior, K1 or K2 only
  ChiSubspaceData basis;
  int source_index = -1;
  std::pair<int, int> hermitian_signature{0, 0};
};

struct BallPoset {
  std::vector<BallNode> nodes;
  std::vector<std::pair<int, int>> cover_relations;
};

// The self-indexed collection K'1 u K'2: hyperbolic intersections of the
// chi hyperplanes, and one K_{J'} per isotropic chi line whose rational
// closure J' + conj(J') is an isotropic plane.
BallPoset ball_strata(const EigenspaceData& chi,
                      const std::vector<ChiSubspaceData>& hyperplanes,
                      const std::vector<ChiSubspaceData>& lines);

struct IsotropicEnumeration {
  std::vector<Subspace> lines;
  std::vector<Subspace> planes;
};

// All isotropic lines spanned by primitive integer vectors with
// coordinates bounded by height, and all isotropic planes spanned by
// orthogonal pairs of them.
IsotropicEnumeration enumerate_isotropic(const SpacePtr& space, int height_bound);

// Exact vector with v.v < 0, when the form has a negative direction.
std::optional<RatVec> negative_vector(const RatMat& gram);

}  // namespace typeiv
