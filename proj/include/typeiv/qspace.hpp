#pragma once

#include <memory>
#include <string>

#include "typeiv/errors.hpp"
#include "typeiv/linalg.hpp"
#include "typeiv/rational.hpp"

namespace typeiv {

// Inertia indices (positive, negative, zero) of a symmetric form.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int dim() const { return positive + negative + zero; }
  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// Exact inertia via symmetric Gaussian reduction with congruence
// transformations; zero rows count toward the zero index.
Signature signature_of(RatMat gram);

class QuadraticSpace;
using SpacePtr = std::shared_ptr<const QuadraticSpace>;

// A rational quadratic space: Q^d with an exact symmetric Gram matrix.
// Immutable; the signature is computed once at construction.
class QuadraticSpace {
 public:
  static SpacePtr create(RatMat gram);

  Eigen::Index dim() const { return gram_.rows(); }
  const RatMat& gram() const { return gram_; }
  const Signature& signature() const { return sig_; }
  bool nondegenerate() const { return sig_.zero == 0; }

 private:
  QuadraticSpace(RatMat gram, Signature sig)
      : gram_(std::move(gram)), sig_(sig) {}

  RatMat gram_;
  Signature sig_;
};

// Convenience constructors for the spaces used throughout.
RatMat hyperbolic_gram();                       // [[0,1],[1,0]]
RatMat diag_gram(std::initializer_list<long> d);
RatMat direct_sum(const RatMat& a, const RatMat& b);
// U^{num_hyperbolic} + diag(1,...,1) with num_positive ones.
SpacePtr standard_space(int num_hyperbolic, int num_positive);

bool same_space(const SpacePtr& a, const SpacePtr& b);

Rational form_product(const QuadraticSpace& sp, const RatVec& x, const RatVec& y);

// A rational subspace, stored as reduced-row-echelon basis rows so that
// equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace(SpacePtr space, RatMat spanning_rows);
  static Subspace zero(SpacePtr space);
  static Subspace full(SpacePtr space);

  const SpacePtr& space() const { return space_; }
  Eigen::Index dim() const { return basis_.rows(); }
  Eigen::Index ambient_dim() const { return space_->dim(); }
  const RatMat& basis() const { return basis_; }

  // Gram matrix of the restricted form in the stored basis.
  RatMat restricted_gram() const;
  Signature restricted_signature() const { return signature_of(restricted_gram()); }
  bool is_totally_isotropic() const { return is_zero_matrix(restricted_gram()); }

 private:
  SpacePtr space_;
  RatMat basis_;
};

bool operator==(const Subspace& a, const Subspace& b);
bool contains(const Subspace& outer, const Subspace& inner);
bool contains_vector(const Subspace& s, const RatVec& v);

// V0 = {x in V : x.y = 0 for all y in V}.
Subspace radical(const Subspace& v);
// Requires a nondegenerate ambient form.
Subspace orthogonal_complement(const Subspace& v);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

enum class SubspaceType { Type1 = 1, Type2 = 2, Type3 = 3 };

inline int type_number(SubspaceType t) { return static_cast<int>(t); }

struct SubspaceClassification {
  SubspaceType type;
  Subspace nilspace;                // V0
  Subspace complement;              // V^perp
  Signature restricted_signature;   // of the form on V
  Signature complement_signature;   // of the form on V^perp
  // Type 1: V^perp has signature (dim V^perp - 2, 2).
  // Type 2: V^perp is negative semidefinite (holds when V contains the
  // orthogonal complement of its nilspace, e.g. V = ker N; reported, not
  // required).  Type 3: no side condition.
  bool side_condition_holds;
  std::string side_condition;
};

// Requires ambient signature (n,2) and V positive semidefinite.
SubspaceClassification classify_subspace(const Subspace& v);

}  // namespace typeiv
