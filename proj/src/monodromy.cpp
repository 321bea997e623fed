#include "typeiv/monodromy.hpp"

namespace typeiv {

namespace {

bool preserves_form(const QuadraticSpace& sp, const RatMat& t) {
  return RatMat(t.transpose() * sp.gram() * t) == sp.gram();
}

bool cube_of_shifted_vanishes(const RatMat& t) {
  const Eigen::Index d = t.rows();
  RatMat x = t - RatMat::Identity(d, d);
  return is_zero_matrix(RatMat(x * x * x));
}

}  // namespace

MonodromyOperator::MonodromyOperator(SpacePtr space, RatMat t)
    : space_(std::move(space)), t_(std::move(t)) {
  if (t_.rows() != space_->dim() || t_.cols() != space_->dim())
    fail(ErrorKind::MalformedInput, "monodromy dimension does not match the space");
  if (!preserves_form(*space_, t_))
    fail(ErrorKind::MalformedInput, "monodromy does not preserve the form");
  if (!cube_of_shifted_vanishes(t_))
    fail(ErrorKind::NeedsBaseChange,
         "(T-1)^3 != 0; replace T by a suitable power first (see unipotent_power)");
}

std::optional<int> unipotent_power(const QuadraticSpace& sp, const RatMat& t,
                                   int max_exponent) {
  if (t.rows() != sp.dim() || t.cols() != sp.dim())
    fail(ErrorKind::MalformedInput, "matrix dimension does not match the space");
  if (!preserves_form(sp, t))
    fail(ErrorKind::MalformedInput, "matrix does not preserve the form");
  RatMat power = t;
  for (int k = 1; k <= max_exponent; ++k) {
    if (cube_of_shifted_vanishes(power)) return k;
    power = power * t;
  }
  return std::nullopt;
}

RatMat log_unipotent(const MonodromyOperator& m) {
  const Eigen::Index d = m.space()->dim();
  RatMat x = m.matrix() - RatMat::Identity(d, d);
  // log(1+X) truncates after two terms since X^3 = 0.
  RatMat n = x - RatMat(x * x) / Rational(2);
  RatMat expn = RatMat::Identity(d, d) + n + RatMat(n * n) / Rational(2);
  if (expn != m.matrix())
    throw std::logic_error("exp(log T) != T");
  return n;
}

NilpotentData classify_nilpotent(const SpacePtr& space, const RatMat& n) {
  const Eigen::Index d = space->dim();
  if (n.rows() != d || n.cols() != d)
    fail(ErrorKind::MalformedInput, "nilpotent dimension does not match the space");
  if (!is_zero_matrix(RatMat(n * n * n)))
    fail(ErrorKind::MalformedInput, "N^3 != 0");
  if (!is_zero_matrix(RatMat(n.transpose() * space->gram() + space->gram() * n)))
    fail(ErrorKind::MalformedInput, "N is not infinitesimally orthogonal");

  if (is_zero_matrix(n))
    return NilpotentData{space,        n,            DegenerationCase::I,
                         std::nullopt, std::nullopt, Rational(0),
                         Subspace::zero(space), Subspace::zero(space)};

  RatMat image_rows = row_space(RatMat(n.transpose()));  // rows span im N
  if (image_rows.rows() != 2)
    fail(ErrorKind::NotTypeIV,
         "rank(N) = " + std::to_string(image_rows.rows()) + ", not a rank-2 log");
  Subspace image(space, image_rows);
  Subspace ker(space, kernel(n));
  Subspace imker = subspace_intersect(image, ker);
  if (imker.dim() == 0)
    fail(ErrorKind::NotTypeIV, "im N meets ker N trivially");

  RatVec e = primitive_rescale(RatVec(imker.basis().row(0).transpose()));
  RatVec ge = space->gram() * e;
  Eigen::Index probe = -1;
  for (Eigen::Index i = 0; i < d; ++i)
    if (sign_of(ge(i)) != 0) {
      probe = i;
      break;
    }
  if (probe < 0) fail(ErrorKind::NotTypeIV, "e pairs to zero with everything");
  // u is determined modulo e; fold the ambiguity into the probe column.
  RatVec u = n.col(probe) / ge(probe);
  RatVec gu = space->gram() * u;
  if (RatMat(u * ge.transpose() - e * gu.transpose()) != n)
    fail(ErrorKind::NotTypeIV, "N is not of the form a -> (a.e)u - (a.u)e");
  if (sign_of(form_product(*space, e, e)) != 0 || sign_of(form_product(*space, e, u)) != 0)
    fail(ErrorKind::NotTypeIV, "extracted pair fails e.e = e.u = 0");

  Rational uu = form_product(*space, u, u);
  DegenerationCase kind =
      sign_of(uu) == 0 ? DegenerationCase::II : DegenerationCase::III;
  RatMat j_rows(2, d);
  j_rows.row(0) = e.transpose();
  j_rows.row(1) = u.transpose();
  Subspace j(space, std::move(j_rows));
  Subspace j0 = radical(j);
  return NilpotentData{space, n, kind, e, u, std::move(uu), std::move(j), std::move(j0)};
}

NilpotentData classify_monodromy(const MonodromyOperator& m) {
  return classify_nilpotent(m.space(), log_unipotent(m));
}

WeightFiltration weight_filtration(const NilpotentData& nd) {
  WeightFiltration w;
  Subspace full = Subspace::full(nd.space);
  switch (nd.kind) {
    case DegenerationCase::I:
      w.steps = {{0, full}};
      break;
    case DegenerationCase::II:
      w.steps = {{-2, Subspace::zero(nd.space)},
                 {-1, nd.j},
                 {0, orthogonal_complement(nd.j)},
                 {1, full}};
      break;
    case DegenerationCase::III:
      w.steps = {{-2, nd.j0},
                 {-1, nd.j0},
                 {0, orthogonal_complement(nd.j0)},
                 {1, orthogonal_complement(nd.j0)},
                 {2, full}};
      break;
  }
  // N(W_k) must land in W_{k-2}.
  for (const auto& [k, sub] : w.steps) {
    Subspace image(nd.space, RatMat(sub.basis() * nd.n.transpose()));
    Subspace target = Subspace::zero(nd.space);
    for (const auto& [k2, sub2] : w.steps)
      if (k2 <= k - 2) target = sub2;
    if (!contains(target, image))
      throw std::logic_error("weight filtration violates N(W_k) in W_{k-2}");
  }
  return w;
}

}  // namespace typeiv
