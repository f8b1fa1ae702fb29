#include "wcm/exact/linalg.hpp"

namespace wcm::exact {

MatrixQ rref(const MatrixQ& input, std::vector<Eigen::Index>* pivotColumns) {
  MatrixQ a = input;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(r));
    const Rational inv = 1 / a(r, c);
    a.row(r) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    if (pivotColumns) pivotColumns->push_back(c);
    ++r;
  }
  return a;
}

Eigen::Index rank(const MatrixQ& a) {
  std::vector<Eigen::Index> pivots;
  rref(a, &pivots);
  return static_cast<Eigen::Index>(pivots.size());
}

MatrixQ nullspace(const MatrixQ& a) {
  std::vector<Eigen::Index> pivots;
  const MatrixQ r = rref(a, &pivots);
  std::vector<bool> isPivot(static_cast<std::size_t>(a.cols()), false);
  for (auto c : pivots) isPivot[static_cast<std::size_t>(c)] = true;
  MatrixQ basis(a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (isPivot[static_cast<std::size_t>(free)]) continue;
    VectorQ v = VectorQ::Zero(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(static_cast<Eigen::Index>(i), free);
    basis.col(k++) = v;
  }
  return basis;
}

std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b) {
  MatrixQ aug(a.rows(), a.cols() + 1);
  aug << a, b;
  std::vector<Eigen::Index> pivots;
  const MatrixQ r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  VectorQ x = VectorQ::Zero(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(static_cast<Eigen::Index>(i), a.cols());
  return x;
}

MatrixQ inverse(const MatrixQ& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  MatrixQ aug(n, 2 * n);
  aug << a, MatrixQ::Identity(n, n);
  std::vector<Eigen::Index> pivots;
  const MatrixQ r = rref(aug, &pivots);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n)
    throw Error(ErrorKind::InvalidArgument, "singular matrix");
  return r.rightCols(n);
}

Rational determinant(const MatrixQ& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  MatrixQ a = input;
  Rational det = 1;
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      a.row(i) -= f * a.row(c);
    }
  }
  return det;
}

}  // namespace wcm::exact
