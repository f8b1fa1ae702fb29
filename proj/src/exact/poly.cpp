#include "wcm/exact/poly.hpp"

#include <boost/math/special_functions/binomial.hpp>

#include <numeric>

namespace wcm::exact {

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.isZero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b[j];
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divmod(a, b).first; }
PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

PolyQ monic(const PolyQ& p) {
  if (p.isZero()) return p;
  return p * Rational(1 / p.leading());
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a, y = b;
  while (!y.isZero()) {
    PolyQ r = x % y;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

bool isSquarefree(const PolyQ& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

PolyQ squarefreePart(const PolyQ& p) {
  if (p.degree() <= 0) return PolyQ::constant(Rational(1));
  return monic(p / gcd(p, derivative(p)));
}

std::vector<std::pair<PolyQ, int>> squarefreeDecomposition(const PolyQ& p) {
  std::vector<std::pair<PolyQ, int>> out;
  if (p.degree() <= 0) return out;
  PolyQ f = monic(p);
  PolyQ d = derivative(f);
  PolyQ a = gcd(f, d);
  PolyQ b = f / a;
  PolyQ c = d / a;
  int i = 1;
  while (b.degree() > 0) {
    PolyQ dd = c - derivative(b);
    PolyQ g = gcd(b, dd);
    if (g.degree() > 0) out.emplace_back(g, i);
    c = dd / g;
    b = b / g;
    ++i;
  }
  return out;
}

Integer content(const PolyZ& p) {
  Integer g = 0;
  for (const auto& a : p.coeffs()) g = boost::multiprecision::gcd(g, a);
  return g;
}

PolyZ primitiveIntegerPart(const PolyQ& p) {
  if (p.isZero()) return PolyZ();
  Integer l = 1;
  for (const auto& a : p.coeffs()) l = boost::multiprecision::lcm(l, den(a));
  std::vector<Integer> c;
  for (const auto& a : p.coeffs()) c.push_back(num(a) * (l / den(a)));
  PolyZ z(std::move(c));
  Integer g = content(z);
  if (z.leading() < 0) g = -g;
  std::vector<Integer> out;
  for (const auto& a : z.coeffs()) out.push_back(a / g);
  return PolyZ(std::move(out));
}

PolyQ toRational(const PolyZ& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return PolyQ(std::move(c));
}

std::vector<Rational> powerSums(const PolyQ& p, int count) {
  const PolyQ f = monic(p);
  const int d = f.degree();
  std::vector<Rational> s(static_cast<std::size_t>(count) + 1, Rational(0));
  for (int k = 1; k <= count; ++k) {
    Rational acc = k <= d ? Rational(-k * f[d - k]) : Rational(0);
    for (int i = 1; i < k && i <= d; ++i) acc -= f[d - i] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = acc;
  }
  s.erase(s.begin());
  return s;
}

PolyQ fromPowerSums(const std::vector<Rational>& sums, int degree) {
  // a[j] = coefficient of t^j, monic of the given degree
  std::vector<Rational> a(static_cast<std::size_t>(degree) + 1, Rational(0));
  a[static_cast<std::size_t>(degree)] = 1;
  for (int k = 1; k <= degree; ++k) {
    Rational acc = sums[static_cast<std::size_t>(k - 1)];
    for (int i = 1; i < k; ++i)
      acc += a[static_cast<std::size_t>(degree - i)] * sums[static_cast<std::size_t>(k - i - 1)];
    a[static_cast<std::size_t>(degree - k)] = -acc / k;
  }
  return PolyQ(std::move(a));
}

PolyQ composedProduct(const PolyQ& f, const PolyQ& g) {
  const int d = f.degree() * g.degree();
  const auto sf = powerSums(f, d), sg = powerSums(g, d);
  std::vector<Rational> s(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = sf[k] * sg[k];
  return fromPowerSums(s, d);
}

PolyQ composedSum(const PolyQ& f, const PolyQ& g) {
  const int m = f.degree(), n = g.degree(), d = m * n;
  auto sf = powerSums(f, d), sg = powerSums(g, d);
  sf.insert(sf.begin(), Rational(m));
  sg.insert(sg.begin(), Rational(n));
  std::vector<Rational> s(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) {
    Rational acc = 0;
    Integer binom = 1;
    for (int j = 0; j <= k; ++j) {
      acc += Rational(binom) * sf[static_cast<std::size_t>(j)] * sg[static_cast<std::size_t>(k - j)];
      binom = binom * (k - j) / (j + 1);
    }
    s[static_cast<std::size_t>(k - 1)] = acc;
  }
  return fromPowerSums(s, d);
}

PolyQ rootPower(const PolyQ& f, int e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "rootPower exponent must be positive");
  if (e == 1) return monic(f);
  const int d = f.degree();
  const auto sf = powerSums(f, d * e);
  std::vector<Rational> s(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) s[static_cast<std::size_t>(k - 1)] = sf[static_cast<std::size_t>(k * e - 1)];
  return fromPowerSums(s, d);
}

PolyQ rootInverse(const PolyQ& f) {
  if (f[0] == 0) throw Error(ErrorKind::ZeroBase, "cannot invert a polynomial with root 0");
  return monic(f.reversed());
}

int eulerPhi(int k) {
  int result = k;
  for (int p = 2; p * p <= k; ++p)
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  if (k > 1) result -= result / k;
  return result;
}

PolyZ cyclotomic(int k) {
  PolyQ acc = PolyQ::monomial(k) - PolyQ::constant(Rational(1));
  for (int j = 1; j < k; ++j)
    if (k % j == 0) acc = acc / toRational(cyclotomic(j));
  return primitiveIntegerPart(acc);
}

bool isSelfReciprocal(const PolyQ& f) {
  if (f.isZero()) return false;
  const PolyQ r = f.reversed();
  if (r.degree() != f.degree()) return false;
  return r == f || r == -f;
}

int rootMultiplicity(const PolyQ& f, const Rational& a) {
  if (f.isZero()) throw Error(ErrorKind::InvalidArgument, "root multiplicity of zero polynomial");
  int m = 0;
  PolyQ g = f;
  const PolyQ lin = PolyQ::linear(a);
  while (g.degree() > 0) {
    auto [q, r] = divmod(g, lin);
    if (!r.isZero()) break;
    g = std::move(q);
    ++m;
  }
  return m;
}

PolyQ characteristicPolynomial(const MatrixQ& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  const auto n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = 1;
  MatrixQ m = MatrixQ::Zero(n, n);
  const MatrixQ id = MatrixQ::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
    const MatrixQ am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Rational(k);
  }
  return PolyQ(std::move(c));
}

MatrixQ evaluateAt(const PolyQ& p, const MatrixQ& a) {
  MatrixQ acc = MatrixQ::Zero(a.rows(), a.cols());
  const MatrixQ id = MatrixQ::Identity(a.rows(), a.cols());
  for (int k = p.degree(); k >= 0; --k) acc = a * acc + p[k] * id;
  return acc;
}

}  // namespace wcm::exact
