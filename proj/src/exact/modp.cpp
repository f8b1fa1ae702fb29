#include "wcm/exact/modp.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wcm::exact {

namespace {

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero mod p");
  return powmod(a, p - 2, p);
}

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primesInRange(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

PolyModP::PolyModP(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& a : c_) a %= p_;
  trim(c_);
}

std::uint64_t PolyModP::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
  return acc;
}

bool operator<(const PolyModP& a, const PolyModP& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string PolyModP::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (a != 1 || k == 0) os << a;
    if (k > 0) os << (a != 1 ? "*" : "") << "t" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  return os.str();
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  const auto p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[static_cast<int>(i)] + b[static_cast<int>(i)]) % p;
  return PolyModP(p, std::move(c));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  const auto p = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[static_cast<int>(i)] + p - b[static_cast<int>(i)]) % p;
  return PolyModP(p, std::move(c));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  const auto p = a.modulus();
  if (a.isZero() || b.isZero()) return PolyModP(p);
  std::vector<std::uint64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto ai = a.coeffs()[i];
    if (!ai) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = (c[i + j] + mulmod(ai, b.coeffs()[j], p)) % p;
  }
  return PolyModP(p, std::move(c));
}

PolyModP operator*(const PolyModP& a, std::uint64_t s) {
  std::vector<std::uint64_t> c = a.coeffs();
  for (auto& x : c) x = mulmod(x, s, a.modulus());
  return PolyModP(a.modulus(), std::move(c));
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  const auto p = a.modulus();
  if (b.isZero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero mod p");
  if (a.degree() < b.degree()) return {PolyModP(p), a};
  std::vector<std::uint64_t> rem = a.coeffs();
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const auto inv = invmod(b.leading(), p);
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto q = mulmod(rem[static_cast<std::size_t>(k + db)], inv, p);
    quot[static_cast<std::size_t>(k)] = q;
    if (!q) continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      r = (r + p - mulmod(q, b[j], p)) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {PolyModP(p, std::move(quot)), PolyModP(p, std::move(rem))};
}

PolyModP operator/(const PolyModP& a, const PolyModP& b) { return divmod(a, b).first; }
PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }

PolyModP monic(const PolyModP& a) {
  if (a.isZero()) return a;
  return a * invmod(a.leading(), a.modulus());
}

PolyModP gcd(const PolyModP& a, const PolyModP& b) {
  PolyModP x = a, y = b;
  while (!y.isZero()) {
    PolyModP r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtendedGcd extendedGcd(const PolyModP& a, const PolyModP& b) {
  const auto p = a.modulus();
  PolyModP r0 = a, r1 = b;
  PolyModP s0 = PolyModP::one(p), s1(p);
  PolyModP t0(p), t1 = PolyModP::one(p);
  while (!r1.isZero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyModP s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    PolyModP t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const auto inv = r0.isZero() ? 1 : invmod(r0.leading(), p);
  return {r0 * inv, s0 * inv, t0 * inv};
}

PolyModP derivative(const PolyModP& a) {
  const auto p = a.modulus();
  std::vector<std::uint64_t> c;
  for (int k = 1; k <= a.degree(); ++k) c.push_back(mulmod(a[k], static_cast<std::uint64_t>(k) % p, p));
  return PolyModP(p, std::move(c));
}

PolyModP powmod(const PolyModP& base, const Integer& e, const PolyModP& m) {
  PolyModP result = PolyModP::one(base.modulus()) % m;
  PolyModP b = base % m;
  const auto bits = e == 0 ? 0 : static_cast<std::int64_t>(boost::multiprecision::msb(e)) + 1;
  for (std::int64_t i = bits - 1; i >= 0; --i) {
    result = (result * result) % m;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = (result * b) % m;
  }
  return result;
}

PolyModP reciprocal(const PolyModP& a) {
  std::vector<std::uint64_t> c(a.coeffs().rbegin(), a.coeffs().rend());
  return monic(PolyModP(a.modulus(), std::move(c)));
}

PolyModP reduce(const PolyZ& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  const Integer P = p;
  for (const auto& a : f.coeffs()) {
    Integer r = a % P;
    if (r < 0) r += P;
    c.push_back(static_cast<std::uint64_t>(r));
  }
  return PolyModP(p, std::move(c));
}

PolyModP reduce(const PolyQ& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  const Integer P = p;
  for (const auto& a : f.coeffs()) {
    Integer d = den(a) % P;
    if (d == 0) throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides a denominator");
    Integer n = num(a) % P;
    if (n < 0) n += P;
    if (d < 0) d += P;
    c.push_back(mulmod(static_cast<std::uint64_t>(n), invmod(static_cast<std::uint64_t>(d), p), p));
  }
  return PolyModP(p, std::move(c));
}

namespace {

std::vector<std::pair<PolyModP, int>> squarefreeFactorization(const PolyModP& f) {
  const auto p = f.modulus();
  std::vector<std::pair<PolyModP, int>> out;
  if (f.degree() <= 0) return out;
  const PolyModP d = derivative(f);
  PolyModP c = gcd(f, d);
  PolyModP w = f / c;
  int i = 1;
  while (!w.isOne() && w.degree() > 0) {
    PolyModP y = gcd(w, c);
    PolyModP fac = w / y;
    if (fac.degree() > 0) out.emplace_back(monic(fac), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    std::vector<std::uint64_t> root;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) root.push_back(c[k]);
    for (auto& [g, m] : squarefreeFactorization(monic(PolyModP(p, std::move(root)))))
      out.emplace_back(g, m * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<PolyModP, int>> distinctDegree(const PolyModP& f) {
  const auto p = f.modulus();
  std::vector<std::pair<PolyModP, int>> out;
  PolyModP rest = f;
  PolyModP h = PolyModP::x(p) % rest;
  int i = 1;
  while (rest.degree() >= 2 * i) {
    h = powmod(h, Integer(p), rest);
    PolyModP g = gcd(rest, h - PolyModP::x(p));
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(monic(rest), rest.degree());
  return out;
}

void equalDegree(const PolyModP& f, int d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
  const auto p = f.modulus();
  if (f.degree() == d) {
    out.push_back(monic(f));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  Integer exponent = 0;
  if (p != 2) {
    Integer q = 1;
    for (int i = 0; i < d; ++i) q *= p;
    exponent = (q - 1) / 2;
  }
  while (true) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
    for (auto& x : c) x = coeff(rng);
    PolyModP a(p, std::move(c));
    if (a.degree() <= 0) continue;
    PolyModP b(p);
    if (p == 2) {
      PolyModP term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      b = powmod(a, exponent, f) - PolyModP::one(p);
    }
    PolyModP g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equalDegree(g, d, rng, out);
      equalDegree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<PolyModP, int>> factorMonic(const PolyModP& f) {
  std::vector<std::pair<PolyModP, int>> out;
  std::mt19937_64 rng(0x5eed5eedULL);
  for (const auto& [sq, mult] : squarefreeFactorization(monic(f))) {
    for (const auto& [block, d] : distinctDegree(sq)) {
      std::vector<PolyModP> pieces;
      equalDegree(block, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

bool isIrreducible(const PolyModP& f) {
  if (f.degree() <= 0) return false;
  const auto factors = factorMonic(f);
  return factors.size() == 1 && factors[0].second == 1;
}

std::vector<int> FactorizationModP::degreePattern() const {
  std::vector<int> out;
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) out.push_back(g.degree());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool FactorizationModP::squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.second == 1; });
}

PolyModP FactorizationModP::product() const {
  PolyModP acc = PolyModP(p, {leading});
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) acc = acc * g;
  return acc;
}

FactorizationModP factorModP(const PolyQ& f, std::uint64_t p) {
  if (!isPrime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw Error(ErrorKind::BadPrime, "prime too large");
  if (f.isZero()) throw Error(ErrorKind::InvalidArgument, "factorization of the zero polynomial");
  const PolyModP r = reduce(f, p);
  if (r.degree() != f.degree())
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " divides the leading coefficient");
  FactorizationModP out{p, r.leading(), {}};
  out.factors = factorMonic(r);
  return out;
}

}  // namespace wcm::exact
