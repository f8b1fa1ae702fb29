#include "wcm/exact/algebraic.hpp"

#include "wcm/exact/factor.hpp"
#include "wcm/exact/roots.hpp"

#include <mpfr.h>

#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace wcm::exact {

namespace {

// Root boxes per minimal polynomial at widths 2^-8, 2^-16, 2^-32, ... The
// sequence of levels is a deterministic function of the polynomial, so the
// boxes handed out never depend on call history or thread interleaving.
struct RootLevels {
  std::mutex mutex;
  std::vector<std::vector<Box>> levels;
};

std::mutex cacheMutex;
std::map<std::string, std::shared_ptr<RootLevels>> cache;

constexpr int kMaxEnclosureBits = 1 << 13;

std::vector<Box> boxesAt(const PolyQ& f, int bits) {
  if (f.degree() == 1) return {Box::point(-f[0])};
  std::shared_ptr<RootLevels> entry;
  {
    std::lock_guard lock(cacheMutex);
    auto& slot = cache[f.str()];
    if (!slot) slot = std::make_shared<RootLevels>();
    entry = slot;
  }
  std::size_t level = 0;
  while ((8 << level) < bits) ++level;
  std::lock_guard lock(entry->mutex);
  if (entry->levels.empty()) entry->levels.push_back(isolateRoots(f, 8));
  while (entry->levels.size() <= level) {
    const int next = 8 << entry->levels.size();
    entry->levels.push_back(refineRoots(f, entry->levels.back(), next));
  }
  return entry->levels[level];
}

// Chooses the root of `candidate` that lies in every enclosure produced by
// `enclose`; enclosures must shrink to the true value as bits grow.
AlgebraicNumber selectRoot(const PolyQ& candidate, const std::function<Box(int)>& enclose);

Rational magnitudeBound(const AlgebraicNumber& a) {
  const Box b = a.enclosure(8);
  const Rational re = b.re.magnitude(), im = b.im.magnitude();
  return re + im + 1;
}

int log2Ceil(const Rational& x) {
  int k = 0;
  Rational p = 1;
  while (p < x) {
    p *= 2;
    ++k;
  }
  return k;
}

Box boxPower(Box b, long e, int bits) {
  Box acc = Box::point(Rational(1));
  while (e > 0) {
    if (e & 1) acc = roundOut(acc * b, bits);
    e >>= 1;
    if (e) b = roundOut(b * b, bits);
  }
  return acc;
}

Rational fromMpfr(const mpfr_t x) {
  mpz_t m;
  mpz_init(m);
  const mpfr_exp_t e = mpfr_get_z_2exp(m, x);
  Integer mant(m);
  mpz_clear(m);
  if (e >= 0) return Rational(Integer(mant << static_cast<unsigned>(e)));
  return Rational(mant, Integer(Integer(1) << static_cast<unsigned>(-e)));
}

// RAII wrapper for a single MPFR value.
struct Mp {
  mpfr_t v;
  explicit Mp(int precision) { mpfr_init2(v, precision); }
  ~Mp() { mpfr_clear(v); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  void set(const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(v, q.backend().data(), rnd); }
};

Rational logRounded(const Rational& x, mpfr_rnd_t rnd, int precision) {
  Mp a(precision);
  a.set(x, rnd);
  mpfr_log(a.v, a.v, rnd);
  return fromMpfr(a.v);
}

Rational atanRounded(const Rational& x, mpfr_rnd_t rnd, int precision) {
  Mp a(precision);
  a.set(x, rnd);
  mpfr_atan(a.v, a.v, rnd);
  return fromMpfr(a.v);
}

Rational piRounded(mpfr_rnd_t rnd, int precision) {
  Mp a(precision);
  mpfr_const_pi(a.v, rnd);
  return fromMpfr(a.v);
}

Rational pow2(int k) {
  return k >= 0 ? Rational(Integer(Integer(1) << k)) : Rational(Integer(1), Integer(Integer(1) << -k));
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& q) : minpoly_(PolyQ::linear(q)), index_(0) {}

AlgebraicNumber AlgebraicNumber::root(const PolyQ& minpoly, int index) {
  if (minpoly.degree() < 1 || minpoly.leading() != 1)
    throw Error(ErrorKind::InvalidArgument, "minimal polynomial must be monic of positive degree");
  if (index < 0 || index >= minpoly.degree()) throw Error(ErrorKind::InvalidArgument, "root index out of range");
  return AlgebraicNumber(minpoly, index);
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots(const PolyQ& minpoly) {
  std::vector<AlgebraicNumber> out;
  for (int i = 0; i < minpoly.degree(); ++i) out.push_back(root(minpoly, i));
  return out;
}

Rational AlgebraicNumber::rationalValue() const {
  if (!isRational()) throw Error(ErrorKind::InvalidArgument, "algebraic number is irrational");
  return -minpoly_[0];
}

bool AlgebraicNumber::isReal() const { return isRational() || enclosure(8).onRealAxis(); }

Box AlgebraicNumber::enclosure(int bits) const {
  if (isRational()) return Box::point(rationalValue());
  if (bits > kMaxEnclosureBits) throw Error(ErrorKind::PrecisionExhausted, "enclosure precision cap reached");
  return boxesAt(minpoly_, bits)[static_cast<std::size_t>(index_)];
}

std::string AlgebraicNumber::str() const {
  if (isRational()) return wcm::toString(rationalValue());
  const Box b = enclosure(40);
  char buf[96];
  const double re = b.re.mid().convert_to<double>(), im = b.im.mid().convert_to<double>();
  if (b.onRealAxis())
    std::snprintf(buf, sizeof buf, "%.10g", re);
  else
    std::snprintf(buf, sizeof buf, "%.10g%+.10gi", re, im);
  return "root #" + std::to_string(index_) + " of " + minpoly_.str() + " ~ " + buf;
}

std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int k = a.degree(); k >= 0; --k) {
    if (a.minpoly_[k] < b.minpoly_[k]) return std::strong_ordering::less;
    if (b.minpoly_[k] < a.minpoly_[k]) return std::strong_ordering::greater;
  }
  return a.index_ <=> b.index_;
}

namespace {

AlgebraicNumber selectRoot(const PolyQ& candidate, const std::function<Box(int)>& enclose) {
  std::vector<PolyQ> factors;
  for (const auto& [g, m] : factorQ(candidate)) factors.push_back(g);
  for (int bits = 16; bits <= kMaxEnclosureBits; bits *= 2) {
    const Box e = enclose(bits);
    int hits = 0;
    std::size_t which = 0;
    int index = 0;
    for (std::size_t k = 0; k < factors.size() && hits < 2; ++k) {
      const auto boxes = boxesAt(factors[k], bits);
      for (std::size_t i = 0; i < boxes.size(); ++i)
        if (intersects(e, boxes[i])) {
          ++hits;
          which = k;
          index = static_cast<int>(i);
        }
    }
    if (hits == 1) return AlgebraicNumber::root(factors[which], index);
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not identify a root of " + candidate.str());
}

}  // namespace

std::vector<AlgebraicNumber> rootsWithMultiplicity(const PolyQ& f, int maxDegree) {
  std::vector<AlgebraicNumber> out;
  for (const auto& [g, m] : factorQ(f, maxDegree))
    for (const auto& r : AlgebraicNumber::roots(g))
      for (int k = 0; k < m; ++k) out.push_back(r);
  return out;
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.isRational() && b.isRational()) return AlgebraicNumber(a.rationalValue() * b.rationalValue());
  if (a.isZero() || b.isZero()) return AlgebraicNumber(Rational(0));
  if (a.isRational() && a.rationalValue() == 1) return b;
  if (b.isRational() && b.rationalValue() == 1) return a;
  const int guard = log2Ceil(magnitudeBound(a) + magnitudeBound(b)) + 4;
  return selectRoot(composedProduct(a.minpoly(), b.minpoly()), [&](int bits) {
    return a.enclosure(bits + guard) * b.enclosure(bits + guard);
  });
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.isRational() && b.isRational()) return AlgebraicNumber(a.rationalValue() + b.rationalValue());
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  return selectRoot(composedSum(a.minpoly(), b.minpoly()),
                    [&](int bits) { return a.enclosure(bits + 2) + b.enclosure(bits + 2); });
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
  if (a.isRational()) return AlgebraicNumber(Rational(-a.rationalValue()));
  std::vector<Rational> c = a.minpoly().coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if ((c.size() - 1 - k) % 2 == 1) c[k] = -c[k];
  const Box zero = Box::point(Rational(0));
  return selectRoot(PolyQ(std::move(c)), [&](int bits) { return zero - a.enclosure(bits); });
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber inverse(const AlgebraicNumber& a) {
  if (a.isZero()) throw Error(ErrorKind::ZeroBase, "inverse of zero");
  if (a.isRational()) return AlgebraicNumber(Rational(1 / a.rationalValue()));
  // |1/a| <= 1/|a|; pick a guard from a lower bound on |a| once the box clears zero
  return selectRoot(rootInverse(a.minpoly()), [&](int bits) {
    for (int extra = 0;; extra += 16) {
      const Box b = a.enclosure(bits + 8 + extra);
      if (b.containsZero()) continue;
      const Interval n = normSquared(b);
      if (n.lo <= 0) continue;
      return reciprocal(b);
    }
  });
}

AlgebraicNumber conjugate(const AlgebraicNumber& a) {
  if (a.isReal()) return a;
  return selectRoot(a.minpoly(), [&](int bits) { return conj(a.enclosure(bits)); });
}

AlgebraicNumber power(const AlgebraicNumber& a, long e) {
  if (e == 0) return AlgebraicNumber(Rational(1));
  if (e < 0) return power(inverse(a), -e);
  if (e == 1 || a.isZero()) return a;
  if (a.isRational()) {
    Rational r = 1;
    for (long k = 0; k < e; ++k) r *= a.rationalValue();
    return AlgebraicNumber(r);
  }
  if (e > 1 << 20) throw Error(ErrorKind::InvalidArgument, "exponent too large");
  const int guard = static_cast<int>(e) * log2Ceil(magnitudeBound(a)) + log2Ceil(Rational(e)) + 4;
  return selectRoot(rootPower(a.minpoly(), static_cast<int>(e)), [&](int bits) {
    return boxPower(a.enclosure(bits + guard), e, bits + guard + 8);
  });
}

AlgebraicNumber algebraicProduct(const std::vector<AlgebraicNumber>& nums, const std::vector<long>& exponents) {
  if (nums.size() != exponents.size())
    throw Error(ErrorKind::DimensionMismatch, "numbers and exponents differ in length");
  // merge repeated bases so equal eigenvalues are raised once
  std::map<AlgebraicNumber, long> merged;
  for (std::size_t i = 0; i < nums.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (nums[i].isZero() && exponents[i] < 0) throw Error(ErrorKind::ZeroBase, "zero base with negative exponent");
    merged[nums[i]] += exponents[i];
  }
  AlgebraicNumber acc(Rational(1));
  Rational rational = 1;
  for (const auto& [base, e] : merged) {
    if (e == 0) continue;
    if (base.isRational()) {
      rational *= power(base, e).rationalValue();
      continue;
    }
    acc = acc * power(base, e);
  }
  return rational == 1 ? acc : acc * AlgebraicNumber(rational);
}

bool equalsOne(const AlgebraicNumber& a) { return a.isRational() && a.rationalValue() == 1; }

std::optional<int> rootOfUnityOrder(const AlgebraicNumber& a) {
  const int d = a.degree();
  // phi(k) >= sqrt(k / 2), so phi(k) = d forces k <= 2 d^2
  for (int k = 1; k <= 2 * d * d + 2; ++k) {
    if (eulerPhi(k) != d) continue;
    if (toRational(cyclotomic(k)) == a.minpoly()) return k;
  }
  return std::nullopt;
}

Interval certifiedLogRational(const Rational& x, int bits) {
  if (x <= 0) throw Error(ErrorKind::ZeroBase, "logarithm of a non-positive number");
  if (x == 1) return Interval(0);
  const Rational target = pow2(-bits);
  for (int extra = 8;; extra += 32) {
    const int precision = bits + extra + 32;
    const Interval out(floorDyadic(logRounded(x, MPFR_RNDD, precision), bits + extra),
                       ceilDyadic(logRounded(x, MPFR_RNDU, precision), bits + extra));
    if (out.width() <= target) return out;
  }
}

Interval certifiedLog(const AlgebraicNumber& a, int bits) {
  if (a.isZero()) throw Error(ErrorKind::ZeroBase, "logarithm of zero");
  if (a.isRational()) return certifiedLogRational(abs(a.rationalValue()), bits);
  const Rational target = pow2(-bits);
  const int guard = log2Ceil(magnitudeBound(a)) + 4;
  for (int extra = 8; bits + extra <= kMaxEnclosureBits; extra += 16) {
    const Box b = a.enclosure(bits + extra + guard);
    const Interval n = normSquared(b);
    if (n.lo <= 0) continue;
    const int precision = bits + extra + 32;
    const Interval out(floorDyadic(logRounded(n.lo, MPFR_RNDD, precision) / 2, bits + extra),
                       ceilDyadic(logRounded(n.hi, MPFR_RNDU, precision) / 2, bits + extra));
    if (out.width() <= target) return out;
  }
  throw Error(ErrorKind::PrecisionExhausted, "certified logarithm did not converge");
}

Interval certifiedPi(int bits) {
  const int precision = bits + 16;
  return {floorDyadic(piRounded(MPFR_RNDD, precision), bits + 8), ceilDyadic(piRounded(MPFR_RNDU, precision), bits + 8)};
}

Interval certifiedArg(const AlgebraicNumber& a, int bits) {
  if (a.isZero()) throw Error(ErrorKind::ZeroBase, "argument of zero");
  if (a.isReal()) {
    const Box b = a.enclosure(8);
    if (b.re.lo > 0) return Interval(0);
    return certifiedPi(bits + 1);
  }
  const Rational target = pow2(-bits);
  const int guard = log2Ceil(magnitudeBound(a)) + 4;
  for (int extra = 8; bits + extra <= kMaxEnclosureBits; extra += 16) {
    const Box b = a.enclosure(bits + extra + guard);
    const int precision = bits + extra + 32;
    const Interval q = b.re / b.im;  // imaginary part bounded away from zero
    const Rational lo = atanRounded(q.lo, MPFR_RNDD, precision), hi = atanRounded(q.hi, MPFR_RNDU, precision);
    const Rational piLo = piRounded(MPFR_RNDD, precision), piHi = piRounded(MPFR_RNDU, precision);
    Interval out = b.im.lo > 0 ? Interval(piLo / 2 - hi, piHi / 2 - lo) : Interval(-piHi / 2 - hi, -piLo / 2 - lo);
    out = roundOut(out, bits + extra);
    if (out.width() <= target) return out;
  }
  throw Error(ErrorKind::PrecisionExhausted, "certified argument did not converge");
}

}  // namespace wcm::exact
