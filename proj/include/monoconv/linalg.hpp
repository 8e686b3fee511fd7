#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "monoconv/rational.hpp"

namespace monoconv {

/// Reduced row echelon form computed exactly. Scalar must be a field with
/// exact equality (Rational); no pivot thresholds are used.
/// Returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> row_reduce(MatrixX<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
Eigen::Index exact_rank(MatrixX<Scalar> m) {
  return static_cast<Eigen::Index>(row_reduce(m).size());
}

/// Affine dimension of a point set given as columns; -1 for the empty set.
template <typename Scalar>
Eigen::Index affine_dimension(const MatrixX<Scalar>& points) {
  if (points.cols() == 0) return -1;
  MatrixX<Scalar> diffs(points.rows(), points.cols() - 1);
  for (Eigen::Index j = 1; j < points.cols(); ++j) diffs.col(j - 1) = points.col(j) - points.col(0);
  return exact_rank(std::move(diffs));
}

}  // namespace monoconv
