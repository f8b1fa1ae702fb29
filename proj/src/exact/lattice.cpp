#include "wcm/exact/lattice.hpp"

#include <cmath>

namespace wcm::exact {

namespace {

Integer dot(const MatrixZ& m, Eigen::Index i, Eigen::Index j) {
  Integer s = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) s += m(i, c) * m(j, c);
  return s;
}

// Nearest integer to a/b, b > 0, ties toward +infinity.
Integer roundDiv(const Integer& a, const Integer& b) {
  Integer twice = 2 * a + b;
  Integer q = twice / (2 * b);
  if (twice % (2 * b) != 0 && twice < 0) q -= 1;
  return q;
}

}  // namespace

// Integral LLL in the formulation with subdeterminants d_i and scaled
// Gram-Schmidt coefficients lambda_{k,j} = d_j mu_{k,j}; all quantities stay integral.
MatrixZ lllReduce(const MatrixZ& input) {
  MatrixZ b = input;
  const Eigen::Index n = b.rows();
  if (n <= 1) return b;
  std::vector<Integer> d(static_cast<std::size_t>(n) + 1, Integer(0));
  MatrixZ lam = MatrixZ::Zero(n + 1, n + 1);  // 1-based
  auto row = [](Eigen::Index i) { return i - 1; };
  d[0] = 1;
  d[1] = dot(b, 0, 0);
  if (d[1] == 0) throw Error(ErrorKind::InvalidArgument, "LLL input rows are dependent");
  Eigen::Index k = 2, kmax = 1;

  auto red = [&](Eigen::Index kk, Eigen::Index l) {
    if (2 * abs(lam(kk, l)) <= d[static_cast<std::size_t>(l)]) return;
    const Integer q = roundDiv(lam(kk, l), d[static_cast<std::size_t>(l)]);
    b.row(row(kk)) -= q * b.row(row(l));
    lam(kk, l) -= q * d[static_cast<std::size_t>(l)];
    for (Eigen::Index i = 1; i < l; ++i) lam(kk, i) -= q * lam(l, i);
  };
  auto swap = [&](Eigen::Index kk) {
    b.row(row(kk)).swap(b.row(row(kk - 1)));
    for (Eigen::Index j = 1; j <= kk - 2; ++j) std::swap(lam(kk, j), lam(kk - 1, j));
    const Integer l = lam(kk, kk - 1);
    const auto uk = static_cast<std::size_t>(kk);
    const Integer bb = (d[uk - 2] * d[uk] + l * l) / d[uk - 1];
    for (Eigen::Index i = kk + 1; i <= kmax; ++i) {
      const Integer t = lam(i, kk);
      lam(i, kk) = (d[uk] * lam(i, kk - 1) - l * t) / d[uk - 1];
      lam(i, kk - 1) = (bb * t + l * lam(i, kk)) / d[uk];
    }
    d[uk - 1] = bb;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (Eigen::Index j = 1; j <= k; ++j) {
        Integer u = dot(b, row(k), row(j));
        for (Eigen::Index i = 1; i < j; ++i)
          u = (d[static_cast<std::size_t>(i)] * u - lam(k, i) * lam(j, i)) / d[static_cast<std::size_t>(i - 1)];
        if (j < k)
          lam(k, j) = u;
        else {
          if (u == 0) throw Error(ErrorKind::InvalidArgument, "LLL input rows are dependent");
          d[static_cast<std::size_t>(k)] = u;
        }
      }
    }
    while (true) {
      red(k, k - 1);
      const auto uk = static_cast<std::size_t>(k);
      const Integer l = lam(k, k - 1);
      if (4 * d[uk] * d[uk - 2] < 3 * d[uk - 1] * d[uk - 1] - 4 * l * l) {
        swap(k);
        k = std::max<Eigen::Index>(2, k - 1);
        continue;
      }
      for (Eigen::Index l2 = k - 2; l2 >= 1; --l2) red(k, l2);
      ++k;
      break;
    }
  }
  return b;
}

std::vector<Rational> gramSchmidtSquaredNorms(const MatrixZ& b) {
  const Eigen::Index n = b.rows();
  std::vector<Rational> out;
  if (n == 0) return out;
  // exact rational Gram-Schmidt on the Gram matrix
  MatrixQ mu = MatrixQ::Zero(n, n);
  std::vector<Rational> norms(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      Rational s(dot(b, i, j));
      for (Eigen::Index l = 0; l < j; ++l) s -= mu(j, l) * mu(i, l) * norms[static_cast<std::size_t>(l)];
      mu(i, j) = s / norms[static_cast<std::size_t>(j)];
    }
    Rational s(dot(b, i, i));
    for (Eigen::Index l = 0; l < i; ++l) s -= mu(i, l) * mu(i, l) * norms[static_cast<std::size_t>(l)];
    norms[static_cast<std::size_t>(i)] = s;
  }
  return norms;
}

MatrixZ hermiteNormalForm(const MatrixZ& input) {
  MatrixZ a = input;
  const Eigen::Index m = a.rows(), n = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    // gcd-combine rows r..m-1 in column c into row r
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        a.row(r).swap(a.row(i));
        continue;
      }
      // extended gcd: x a + y b = g
      Integer x0 = 1, y0 = 0, x1 = 0, y1 = 1, p = a(r, c), q = a(i, c);
      while (q != 0) {
        const Integer t = p / q;
        Integer tmp = p - t * q;
        p = q;
        q = tmp;
        tmp = x0 - t * x1;
        x0 = x1;
        x1 = tmp;
        tmp = y0 - t * y1;
        y0 = y1;
        y1 = tmp;
      }
      const Integer g = p;
      const Integer u = a(r, c) / g, v = a(i, c) / g;
      const VectorZ rr = a.row(r).transpose(), ri = a.row(i).transpose();
      a.row(r) = (x0 * rr + y0 * ri).transpose();
      a.row(i) = (u * ri - v * rr).transpose();
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) a.row(r) = -a.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = a(i, c) / a(r, c);
      if (a(i, c) - q * a(r, c) < 0) q -= 1;
      if (q != 0) a.row(i) -= q * a.row(r);
    }
    ++r;
  }
  return a.topRows(r);
}

bool inLattice(const MatrixZ& hnf, const VectorZ& v) {
  VectorZ rest = v;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < rest.size(); ++c) {
    if (row < hnf.rows() && hnf(row, c) != 0) {
      if (rest[c] % hnf(row, c) != 0) return false;
      const Integer q = rest[c] / hnf(row, c);
      rest -= q * hnf.row(row).transpose();
      ++row;
    } else if (rest[c] != 0) {
      return false;
    }
  }
  return true;
}

void enumerateShortVectors(const MatrixZ& basis, const Integer& radiusSquared,
                           const std::function<void(const VectorZ&)>& visit) {
  const Eigen::Index r = basis.rows();
  if (r == 0) return;
  // floating Cholesky of the Gram matrix, used only to bound the search; the
  // final norm test is exact
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> gram(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) gram(i, j) = dot(basis, i, j).convert_to<long double>();
  // q(i,i) = ||b*_i||^2, q(i,j) = mu_{j,i} for j > i
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> q = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      long double s = gram(i, j);
      for (Eigen::Index l = 0; l < j; ++l) s -= q(l, j) * q(l, i) * q(l, l);
      q(j, i) = s / q(j, j);
    }
    long double s = gram(i, i);
    for (Eigen::Index l = 0; l < i; ++l) s -= q(l, i) * q(l, i) * q(l, l);
    q(i, i) = s;
  }
  const long double bound = radiusSquared.convert_to<long double>() * (1 + 1e-9L) + 1e-6L;
  std::vector<long> x(static_cast<std::size_t>(r), 0);
  std::function<void(Eigen::Index, long double)> descend = [&](Eigen::Index i, long double used) {
    long double center = 0;
    for (Eigen::Index j = i + 1; j < r; ++j) center -= q(i, j) * static_cast<long double>(x[static_cast<std::size_t>(j)]);
    const long double room = (bound - used) / q(i, i);
    if (room < 0) return;
    const long double span = std::sqrt(room);
    const long lo = static_cast<long>(std::ceil(center - span - 1e-9L));
    const long hi = static_cast<long>(std::floor(center + span + 1e-9L));
    for (long xi = lo; xi <= hi; ++xi) {
      x[static_cast<std::size_t>(i)] = xi;
      const long double diff = static_cast<long double>(xi) - center;
      const long double next = used + q(i, i) * diff * diff;
      if (next > bound) continue;
      if (i > 0) {
        descend(i - 1, next);
        continue;
      }
      // keep one of +-v: last nonzero coefficient positive
      Eigen::Index last = r - 1;
      while (last >= 0 && x[static_cast<std::size_t>(last)] == 0) --last;
      if (last < 0 || x[static_cast<std::size_t>(last)] < 0) continue;
      VectorZ v = VectorZ::Zero(basis.cols());
      for (Eigen::Index j = 0; j < r; ++j)
        if (x[static_cast<std::size_t>(j)] != 0) v += Integer(x[static_cast<std::size_t>(j)]) * basis.row(j).transpose();
      if (v.squaredNorm() <= radiusSquared) visit(v);
    }
    x[static_cast<std::size_t>(i)] = 0;
  };
  descend(r - 1, 0);
}

}  // namespace wcm::exact
