#include "typeiv/qspace.hpp"

#include <sstream>

namespace typeiv {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorKind::Schema, "empty rational literal");
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Schema, "bad rational literal '" + s + "'");
  }
}

std::string to_string(const Rational& x) { return x.get_str(); }

RatVec primitive_rescale(const RatVec& v) {
  Integer den(1), num(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    den = lcm(den, v(i).get_den());
    num = gcd(num, v(i).get_num());
  }
  if (num == 0) return v;
  RatVec out = v * Rational(den, num);
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i).canonicalize();
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (sign_of(out(i)) != 0) {
      if (sign_of(out(i)) < 0) out = -out;
      break;
    }
  }
  return out;
}

RatMat rat_mat_from_longs(std::initializer_list<std::initializer_list<long>> rows) {
  RatMat m(static_cast<Eigen::Index>(rows.size()),
           rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

RatVec rat_vec_from_longs(std::initializer_list<long> entries) {
  RatVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long x : entries) v(i++) = Rational(x);
  return v;
}

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.positive << "," << s.negative << "," << s.zero << ")";
  return os.str();
}

Signature signature_of(RatMat m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) fail(ErrorKind::MalformedInput, "signature of non-square matrix");
  Signature sig;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (sign_of(m(i, i)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      // All remaining diagonal entries vanish; a congruence row+column add
      // creates a nonzero diagonal entry unless the block is zero.
      Eigen::Index oi = -1, oj = -1;
      for (Eigen::Index i = k; i < n && oi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n && oi < 0; ++j)
          if (sign_of(m(i, j)) != 0) {
            oi = i;
            oj = j;
          }
      if (oi < 0) {
        sig.zero += static_cast<int>(n - k);
        return sig;
      }
      m.row(oi) += m.row(oj);
      m.col(oi) += m.col(oj);
      piv = oi;
    }
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      m.col(piv).swap(m.col(k));
    }
    if (sign_of(m(k, k)) > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (sign_of(m(i, k)) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      m.row(i) -= f * m.row(k);
      m.col(i) -= f * m.col(k);
    }
  }
  return sig;
}

SpacePtr QuadraticSpace::create(RatMat gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    fail(ErrorKind::MalformedInput, "gram matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i))
        fail(ErrorKind::MalformedInput, "gram matrix is not symmetric");
  Signature sig = signature_of(gram);
  return SpacePtr(new QuadraticSpace(std::move(gram), sig));
}

RatMat hyperbolic_gram() { return rat_mat_from_longs({{0, 1}, {1, 0}}); }

RatMat diag_gram(std::initializer_list<long> d) {
  RatMat m = RatMat::Zero(static_cast<Eigen::Index>(d.size()),
                          static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (long x : d) {
    m(i, i) = Rational(x);
    ++i;
  }
  return m;
}

RatMat direct_sum(const RatMat& a, const RatMat& b) {
  RatMat m = RatMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

SpacePtr standard_space(int num_hyperbolic, int num_positive) {
  RatMat g(0, 0);
  for (int i = 0; i < num_hyperbolic; ++i)
    g = g.rows() ? direct_sum(g, hyperbolic_gram()) : hyperbolic_gram();
  for (int i = 0; i < num_positive; ++i)
    g = g.rows() ? direct_sum(g, diag_gram({1})) : diag_gram({1});
  return QuadraticSpace::create(g);
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->dim() == b->dim() && a->gram() == b->gram();
}

Rational form_product(const QuadraticSpace& sp, const RatVec& x, const RatVec& y) {
  if (x.size() != sp.dim() || y.size() != sp.dim())
    fail(ErrorKind::MalformedInput, "vector dimension does not match the space");
  return (x.transpose() * sp.gram() * y)(0, 0);
}

Subspace::Subspace(SpacePtr space, RatMat spanning_rows) : space_(std::move(space)) {
  if (!space_) fail(ErrorKind::MalformedInput, "subspace without ambient space");
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != space_->dim())
    fail(ErrorKind::MalformedInput, "basis vector length does not match the ambient dimension");
  if (spanning_rows.rows() == 0) spanning_rows.resize(0, space_->dim());
  basis_ = row_space(std::move(spanning_rows));
}

Subspace Subspace::zero(SpacePtr space) {
  Eigen::Index d = space->dim();
  return Subspace(std::move(space), RatMat(0, d));
}

Subspace Subspace::full(SpacePtr space) {
  Eigen::Index d = space->dim();
  return Subspace(std::move(space), RatMat(RatMat::Identity(d, d)));
}

RatMat Subspace::restricted_gram() const {
  return basis_ * space_->gram() * basis_.transpose();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return same_space(a.space(), b.space()) && a.basis() == b.basis();
}

bool contains(const Subspace& outer, const Subspace& inner) {
  if (!same_space(outer.space(), inner.space()))
    fail(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
  if (inner.dim() == 0) return true;
  RatMat stacked(outer.dim() + inner.dim(), outer.ambient_dim());
  stacked.topRows(outer.dim()) = outer.basis();
  stacked.bottomRows(inner.dim()) = inner.basis();
  return rank_of(std::move(stacked)) == outer.dim();
}

bool contains_vector(const Subspace& s, const RatVec& v) {
  RatMat m(1, v.size());
  m.row(0) = v.transpose();
  return contains(s, Subspace(s.space(), std::move(m)));
}

Subspace radical(const Subspace& v) {
  RatMat k = kernel(v.restricted_gram());
  return Subspace(v.space(), k * v.basis());
}

Subspace orthogonal_complement(const Subspace& v) {
  const auto& sp = *v.space();
  if (!sp.nondegenerate())
    fail(ErrorKind::UnsupportedInput, "orthogonal complement needs a nondegenerate ambient form");
  if (v.dim() == 0) return Subspace::full(v.space());
  RatMat pairing = v.basis() * sp.gram();  // rows are functionals x -> b_i . x
  return Subspace(v.space(), kernel(pairing));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (!same_space(a.space(), b.space()))
    fail(ErrorKind::AmbientMismatch, "subspace sum across different ambient spaces");
  RatMat stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked.topRows(a.dim()) = a.basis();
  stacked.bottomRows(b.dim()) = b.basis();
  return Subspace(a.space(), std::move(stacked));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (!same_space(a.space(), b.space()))
    fail(ErrorKind::AmbientMismatch, "subspace intersection across different ambient spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.space());
  // x = c^T A = d^T B; solve [A^T | -B^T] (c,d) = 0.
  RatMat sys(a.ambient_dim(), a.dim() + b.dim());
  sys.leftCols(a.dim()) = a.basis().transpose();
  sys.rightCols(b.dim()) = -b.basis().transpose();
  RatMat coeffs = kernel(sys);
  return Subspace(a.space(), coeffs.leftCols(a.dim()) * a.basis());
}

SubspaceClassification classify_subspace(const Subspace& v) {
  const auto& amb = v.space()->signature();
  if (amb.zero != 0 || amb.negative != 2)
    fail(ErrorKind::UnsupportedInput,
         "classification needs an ambient form of signature (n,2), got " + to_string(amb));
  Signature rs = v.restricted_signature();
  if (rs.negative > 0)
    fail(ErrorKind::ClassificationError,
         "subspace is not positive semidefinite (restricted signature " + to_string(rs) + ")");
  if (rs.zero > 2)
    fail(ErrorKind::ImpossibleInput,
         "radical of dimension >= 3 cannot occur under an (n,2) ambient form");
  SubspaceType type = rs.zero == 0   ? SubspaceType::Type1
                      : rs.zero == 2 ? SubspaceType::Type2
                                     : SubspaceType::Type3;
  Subspace nil = radical(v);
  Subspace comp = orthogonal_complement(v);
  Signature cs = comp.restricted_signature();
  bool ok = true;
  std::string cond;
  switch (type) {
    case SubspaceType::Type1:
      ok = cs == Signature{static_cast<int>(comp.dim()) - 2, 2, 0};
      cond = "V^perp has signature (dim V^perp - 2, 2)";
      break;
    case SubspaceType::Type2:
      ok = cs.positive == 0;
      cond = "V^perp is negative semidefinite";
      break;
    case SubspaceType::Type3:
      cond = "none";
      break;
  }
  return SubspaceClassification{type, std::move(nil), std::move(comp), rs, cs, ok, cond};
}

}  // namespace typeiv
