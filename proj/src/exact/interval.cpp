#include "wcm/exact/interval.hpp"

#include <algorithm>

namespace wcm::exact {

Interval::Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.isPoint() && b.isPoint()) return Interval(a.lo * b.lo);
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.containsZero()) throw Error(ErrorKind::ZeroBase, "interval division by an interval containing zero");
  return a * Interval(1 / b.hi, 1 / b.lo);
}

Interval square(const Interval& a) {
  const Rational l = a.lo * a.lo, h = a.hi * a.hi;
  if (a.containsZero()) return {Rational(0), std::max(l, h)};
  return {std::min(l, h), std::max(l, h)};
}

bool intersects(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

Interval intersect(const Interval& a, const Interval& b) {
  if (!intersects(a, b)) throw Error(ErrorKind::InvalidArgument, "disjoint intervals");
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

namespace {
Integer floorDiv(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) q -= 1;
  return q;
}
}  // namespace

Rational floorDyadic(const Rational& x, int bits) {
  const Integer scale = Integer(1) << bits;
  if (den(x) == 1 || (scale % den(x)) == 0) return x;
  return Rational(floorDiv(num(x) * scale, den(x)), scale);
}

Rational ceilDyadic(const Rational& x, int bits) { return -floorDyadic(-x, bits); }

Interval roundOut(const Interval& a, int bits) { return {floorDyadic(a.lo, bits), ceilDyadic(a.hi, bits)}; }

Rational sqrtUpper(const Rational& x, int bits) {
  if (x < 0) throw Error(ErrorKind::InvalidArgument, "square root of a negative number");
  // floor(sqrt(x * 4^k)) / 2^k is within 2^-k of sqrt(x) from below
  const Integer scaled = (num(x) << (2 * bits)) / den(x);
  const Integer s = boost::multiprecision::sqrt(scaled);
  Rational r(Integer(s + 1), Integer(Integer(1) << bits));
  while (r * r < x) r += Rational(1, Integer(Integer(1) << bits));
  return r;
}

Rational sqrtLower(const Rational& x, int bits) {
  if (x < 0) throw Error(ErrorKind::InvalidArgument, "square root of a negative number");
  const Integer scaled = (num(x) << (2 * bits)) / den(x);
  return Rational(boost::multiprecision::sqrt(scaled), Integer(Integer(1) << bits));
}

Box operator+(const Box& a, const Box& b) { return {a.re + b.re, a.im + b.im}; }
Box operator-(const Box& a, const Box& b) { return {a.re - b.re, a.im - b.im}; }

Box operator*(const Box& a, const Box& b) {
  if (a.onRealAxis() && b.onRealAxis()) return {a.re * b.re, Interval(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Interval normSquared(const Box& b) { return square(b.re) + square(b.im); }

Box reciprocal(const Box& b) {
  if (b.containsZero()) throw Error(ErrorKind::ZeroBase, "reciprocal of a box containing zero");
  if (b.onRealAxis()) return {Interval(1) / b.re, Interval(0)};
  const Interval n = normSquared(b);
  if (n.lo <= 0) throw Error(ErrorKind::ZeroBase, "reciprocal of a box too close to zero");
  return {b.re / n, -b.im / n};
}

bool intersects(const Box& a, const Box& b) { return intersects(a.re, b.re) && intersects(a.im, b.im); }
Box intersect(const Box& a, const Box& b) { return {intersect(a.re, b.re), intersect(a.im, b.im)}; }
Box roundOut(const Box& a, int bits) { return {roundOut(a.re, bits), roundOut(a.im, bits)}; }
Box conj(const Box& b) { return {b.re, -b.im}; }

std::string toString(const Interval& a) { return "[" + wcm::toString(a.lo) + ", " + wcm::toString(a.hi) + "]"; }

}  // namespace wcm::exact
