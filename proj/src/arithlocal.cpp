#include "wcm/arithlocal.hpp"

#include "wcm/exact/algebraic.hpp"
#include "wcm/exact/modp.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace wcm::arithlocal {

namespace {

struct Split {
  long v = 0;           // p-adic valuation
  Integer unitNum, unitDen;  // a = p^v unitNum / unitDen, both prime to p
};

Split splitAt(const Rational& a, std::uint64_t p) {
  Split s{0, abs(num(a)), den(a)};
  if (a < 0) s.unitNum = -s.unitNum;
  while (s.unitNum % p == 0) {
    s.unitNum /= p;
    ++s.v;
  }
  while (s.unitDen % p == 0) {
    s.unitDen /= p;
    --s.v;
  }
  return s;
}

std::uint64_t residue(const Integer& x, std::uint64_t p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

int legendre(const Integer& x, std::uint64_t p) {
  const std::uint64_t r = residue(x, p);
  if (r == 0) return 0;
  const Integer e = boost::multiprecision::powm(Integer(r), Integer((p - 1) / 2), Integer(p));
  return e == 1 ? 1 : -1;
}

// class of a 2-adic unit mod 8
unsigned mod8(const Split& s) { return static_cast<unsigned>(residue(s.unitNum * s.unitDen, 8)); }
int eps2(unsigned u) { return ((u - 1) / 2) % 2; }
int omega2(unsigned u) { return ((u * u - 1) / 8) % 2; }

bool isSquare(const Rational& d, const Place& v) {
  if (v.infinite()) return d > 0;
  const Split s = splitAt(d, v.p);
  if (s.v % 2 != 0) return false;
  if (v.p == 2) return mod8(s) == 1;
  return legendre(s.unitNum * s.unitDen, v.p) == 1;
}

Rational discriminant(const QuadraticForm& q) {
  Rational d(1);
  for (const auto& a : q.diag) d *= a;
  return d;
}

void checkForm(const QuadraticForm& q) {
  if (q.diag.empty()) throw Error(ErrorKind::InvalidArgument, "empty quadratic form");
  for (const auto& a : q.diag)
    if (a == 0) throw Error(ErrorKind::InvalidArgument, "degenerate quadratic form");
}

bool isotropic(int n, const Rational& d, int eps, const Place& v) {
  switch (n) {
    case 0:
    case 1:
      return false;
    case 2:
      return isSquare(-d, v);
    case 3:
      return hilbertSymbol(Rational(-1), -d, v) == eps;
    case 4:
      return !isSquare(d, v) || eps == hilbertSymbol(Rational(-1), Rational(-1), v);
    default:
      return true;
  }
}

}  // namespace

Place Place::prime(std::uint64_t p) {
  if (!exact::isPrime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
  return Place{p};
}

std::string Place::str() const { return infinite() ? "inf" : std::to_string(p); }

int hilbertSymbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw Error(ErrorKind::ZeroBase, "Hilbert symbol of zero");
  if (v.infinite()) return a < 0 && b < 0 ? -1 : 1;
  const Split sa = splitAt(a, v.p), sb = splitAt(b, v.p);
  const long alpha = sa.v, beta = sb.v;
  if (v.p == 2) {
    const unsigned u = mod8(sa), w = mod8(sb);
    const long e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int sign = 1;
  if ((alpha * beta) % 2 != 0 && ((v.p - 1) / 2) % 2 != 0) sign = -sign;
  if (beta % 2 != 0) sign *= legendre(sa.unitNum * sa.unitDen, v.p);
  if (alpha % 2 != 0) sign *= legendre(sb.unitNum * sb.unitDen, v.p);
  return sign;
}

int hasseInvariant(const QuadraticForm& q, const Place& v) {
  int h = 1;
  for (std::size_t i = 0; i < q.diag.size(); ++i)
    for (std::size_t j = i + 1; j < q.diag.size(); ++j) h *= hilbertSymbol(q.diag[i], q.diag[j], v);
  return h;
}

int wittIndex(const QuadraticForm& q, const Place& v) {
  checkForm(q);
  if (v.infinite()) {
    const auto pos = std::count_if(q.diag.begin(), q.diag.end(), [](const Rational& a) { return a > 0; });
    return static_cast<int>(std::min<long>(pos, static_cast<long>(q.diag.size()) - pos));
  }
  // q = H + q' gives d(q') = -d(q) and eps(q) = eps(q') (-1, d(q'))
  int n = static_cast<int>(q.diag.size()), index = 0, eps = hasseInvariant(q, v);
  Rational d = discriminant(q);
  while (isotropic(n, d, eps, v)) {
    d = -d;
    eps *= hilbertSymbol(Rational(-1), d, v);
    n -= 2;
    ++index;
  }
  return index;
}

bool quaternionSplits(const QuaternionAlgebra& h, const Place& v) { return hilbertSymbol(h.a, h.b, v) == 1; }

std::vector<Place> relevantPlaces(const std::vector<Rational>& numbers) {
  std::set<std::uint64_t> primes{2};
  for (const auto& x : numbers) {
    if (x == 0) continue;
    for (const Integer& part : {abs(num(x)), den(x)})
      for (const auto& [p, e] : factorInteger(part)) {
        if (p > std::numeric_limits<std::uint64_t>::max())
          throw Error(ErrorKind::InvalidArgument, "prime factor exceeds 64 bits");
        primes.insert(p.convert_to<std::uint64_t>());
      }
  }
  std::vector<Place> out{Place::infinity()};
  for (auto p : primes) out.push_back(Place{p});
  return out;
}

TwinsVerdict twins(const QuadraticForm& q, const QuaternionAlgebra& h, bool hermitianDefiniteAtInfinity) {
  const auto dim = q.diag.size();
  if (dim % 2 == 0 || dim < 7) throw Error(ErrorKind::BadDimension, "dim q must be odd and at least 7");
  checkForm(q);
  if (h.a == 0 || h.b == 0) throw Error(ErrorKind::InvalidArgument, "quaternion symbol with zero entry");
  TwinsVerdict out;
  out.n = static_cast<int>(dim - 1) / 2;
  std::vector<Rational> numbers = q.diag;
  numbers.push_back(h.a);
  numbers.push_back(h.b);
  out.twins = true;
  for (const auto& v : relevantPlaces(numbers)) {
    TwinsRow row;
    row.place = v;
    row.wittIndex = wittIndex(q, v);
    row.hilbert = hilbertSymbol(h.a, h.b, v);
    row.bSplit = row.wittIndex == out.n;
    row.bAnisotropic = row.wittIndex == 0;
    row.cSplit = row.hilbert == 1;
    row.cAnisotropic = v.infinite() && row.hilbert == -1 && hermitianDefiniteAtInfinity;
    row.agree = (row.bSplit && row.cSplit) || (row.bAnisotropic && row.cAnisotropic);
    out.twins = out.twins && row.agree;
    out.table.push_back(row);
  }
  return out;
}

PolyQ bcTorusCorrespondence(const PolyQ& f) {
  if (f.degree() < 1 || f.degree() % 2 != 0) throw Error(ErrorKind::BadDimension, "degree must be even and positive");
  if (f(Rational(1)) == 0) throw Error(ErrorKind::RootAtOne, "f(1) = 0");
  if (!exact::isSquarefree(f)) throw Error(ErrorKind::NotSquarefree, f.str());
  if (!exact::isSelfReciprocal(f)) throw Error(ErrorKind::NotPalindromic, f.str());
  return PolyQ(std::vector<Rational>{Rational(-1), Rational(1)}) * f;
}

int fixedDimension(const PolyQ& f) {
  if (f.degree() < 1 || !exact::isSelfReciprocal(f)) throw Error(ErrorKind::NotPalindromic, f.str());
  if (!exact::isSquarefree(f)) throw Error(ErrorKind::NotSquarefree, f.str());
  auto rest = exact::rootsWithMultiplicity(f, f.degree());
  int orbits = 0;
  while (!rest.empty()) {
    const auto r = rest.front();
    rest.erase(rest.begin());
    auto partner = std::find(rest.begin(), rest.end(), exact::inverse(r));
    if (partner != rest.end()) rest.erase(partner);
    ++orbits;
  }
  if (orbits != (f.degree() + 1) / 2) throw std::logic_error("orbit count disagrees with [(d+1)/2]");
  return orbits;
}

}  // namespace wcm::arithlocal
