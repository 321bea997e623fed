#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "typeiv/errors.hpp"

// Exact dense elimination over an arbitrary field scalar (Rational,
// Cyclo<L>).  Pivots are the first nonzero entry in column order, so all
// outputs are deterministic and reduced row echelon form is a canonical
// representative of the row space.

namespace typeiv {

template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DenseVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool scalar_is_zero(const S& x) {
  return x == S(0);
}

template <class S>
int rref_in_place(DenseMat<S>& m, std::vector<Eigen::Index>* pivot_cols = nullptr) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!scalar_is_zero(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    S inv = S(1) / m(r, c);
    m.row(r) *= inv;
    m(r, c) = S(1);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || scalar_is_zero(m(i, c))) continue;
      S f = m(i, c);
      m.row(i) -= f * m.row(r);
      m(i, c) = S(0);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return static_cast<int>(r);
}

template <class S>
DenseMat<S> rref(DenseMat<S> m) {
  rref_in_place(m);
  return m;
}

template <class S>
int rank_of(DenseMat<S> m) {
  return rref_in_place(m);
}

// Canonical row space: RREF rows with zero rows dropped.
template <class S>
DenseMat<S> row_space(DenseMat<S> m) {
  int r = rref_in_place(m);
  return m.topRows(r);
}

// Rows span the right kernel {x : m x = 0}; returned in canonical form.
template <class S>
DenseMat<S> kernel(const DenseMat<S>& m) {
  DenseMat<S> red = m;
  std::vector<Eigen::Index> pivots;
  int r = rref_in_place(red, &pivots);
  const Eigen::Index cols = m.cols();
  DenseMat<S> out(cols - r, cols);
  out.setZero();
  Eigen::Index row = 0;
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    out(row, c) = S(1);
    for (int i = 0; i < r; ++i) out(row, pivots[static_cast<size_t>(i)]) = -red(i, c);
    ++row;
  }
  return row_space(std::move(out));
}

template <class S>
std::optional<DenseVec<S>> try_solve(const DenseMat<S>& a, const DenseVec<S>& b) {
  DenseMat<S> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> pivots;
  int r = rref_in_place(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  DenseVec<S> x = DenseVec<S>::Zero(a.cols());
  for (int i = 0; i < r; ++i) x(pivots[static_cast<size_t>(i)]) = aug(i, a.cols());
  return x;
}

template <class S>
DenseMat<S> inverse(const DenseMat<S>& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) fail(ErrorKind::MalformedInput, "inverse of non-square matrix");
  DenseMat<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = DenseMat<S>::Identity(n, n);
  int r = rref_in_place(aug);
  if (r < n) fail(ErrorKind::MalformedInput, "matrix is singular");
  return aug.rightCols(n);
}

template <class S>
bool is_zero_matrix(const DenseMat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!scalar_is_zero(m(i, j))) return false;
  return true;
}

}  // namespace typeiv
