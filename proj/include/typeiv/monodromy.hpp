#pragma once

#include <optional>
#include <vector>

#include "typeiv/qspace.hpp"
#include "typeiv/scalar.hpp"

namespace typeiv {

// Form-preserving operator with (T-1)^3 = 0; both checked at construction.
class MonodromyOperator {
 public:
  MonodromyOperator(SpacePtr space, RatMat t);

  const SpacePtr& space() const { return space_; }
  const RatMat& matrix() const { return t_; }

 private:
  SpacePtr space_;
  RatMat t_;
};

// Smallest k <= max_exponent with (T^k - 1)^3 = 0, for a form-preserving T
// of possibly finite order.  Preprocessing helper; the library otherwise
// expects unipotent input.
std::optional<int> unipotent_power(const QuadraticSpace& sp, const RatMat& t,
                                   int max_exponent = 60);

enum class DegenerationCase { I = 1, II = 2, III = 3 };

inline const char* to_string(DegenerationCase c) {
  switch (c) {
    case DegenerationCase::I: return "I";
    case DegenerationCase::II: return "II";
    case DegenerationCase::III: return "III";
  }
  return "?";
}

// N together with the degeneration case and its defining vectors:
// N(a) = (a.e)u - (a.u)e, with e.e = e.u = 0.  Case II means u.u = 0,
// case III means u.u != 0.  J = span{e,u}, J0 = nilspace of J.
struct NilpotentData {
  SpacePtr space;
  RatMat n;
  DegenerationCase kind = DegenerationCase::I;
  std::optional<RatVec> e;
  std::optional<RatVec> u;
  Rational uu;
  Subspace j;
  Subspace j0;
};

// N = log T = (T-1) - (T-1)^2/2; exp(N) = T is re-verified exactly.
RatMat log_unipotent(const MonodromyOperator& m);

NilpotentData classify_nilpotent(const SpacePtr& space, const RatMat& n);
NilpotentData classify_monodromy(const MonodromyOperator& m);

struct WeightFiltration {
  std::vector<std::pair<int, Subspace>> steps;  // increasing, last step is H
};

// Closed-form limit weight filtration for the three cases; every output
// satisfies N(W_k) subset of W_{k-2}.
WeightFiltration weight_filtration(const NilpotentData& nd);

// exp(wN)(a) = a + w(a.e)u - w(a.u)e - (1/2)w^2(u.u)(a.e)e, exact over any
// of the supported scalars (rational, Gaussian rational, complex double).
template <class S>
DenseMat<S> one_param(const NilpotentData& nd, const S& w) {
  const Eigen::Index d = nd.space->dim();
  DenseMat<S> out = DenseMat<S>::Identity(d, d);
  if (nd.kind == DegenerationCase::I) return out;
  DenseVec<S> e = promote_vector<S>(*nd.e);
  DenseVec<S> u = promote_vector<S>(*nd.u);
  DenseVec<S> ge = promote_vector<S>(RatVec(nd.space->gram() * (*nd.e)));
  DenseVec<S> gu = promote_vector<S>(RatVec(nd.space->gram() * (*nd.u)));
  S half_w2_uu = w * w * ScalarOps<S>::promote(nd.uu) / S(2);
  out += w * (u * ge.transpose()) - w * (e * gu.transpose()) -
         half_w2_uu * (e * ge.transpose());
  return out;
}

}  // namespace typeiv
