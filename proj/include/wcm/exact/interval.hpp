#pragma once

#include "wcm/core.hpp"

#include <string>

namespace wcm::exact {

/// Closed interval with rational endpoints.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(const Rational& l, const Rational& h);

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool containsZero() const { return lo <= 0 && 0 <= hi; }
  bool isPoint() const { return lo == hi; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }
  Rational magnitude() const { return abs(lo) > abs(hi) ? abs(lo) : abs(hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws ZeroBase when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval square(const Interval& a);
bool intersects(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

/// Largest dyadic m/2^bits <= x, smallest >= x.
Rational floorDyadic(const Rational& x, int bits);
Rational ceilDyadic(const Rational& x, int bits);
/// Outward rounding of both endpoints to multiples of 2^-bits.
Interval roundOut(const Interval& a, int bits);

/// Dyadic rational r >= sqrt(x) with r - sqrt(x) <= 2^-bits; x >= 0.
Rational sqrtUpper(const Rational& x, int bits);
Rational sqrtLower(const Rational& x, int bits);

/// Axis-aligned complex rectangle.
struct Box {
  Interval re, im;

  Box() = default;
  Box(const Interval& r, const Interval& i) : re(r), im(i) {}
  static Box point(const Rational& x, const Rational& y = 0) { return Box(Interval(x), Interval(y)); }

  bool containsZero() const { return re.containsZero() && im.containsZero(); }
  bool onRealAxis() const { return im.isPoint() && im.lo == 0; }
  Rational width() const { return re.width() > im.width() ? re.width() : im.width(); }

  friend bool operator==(const Box&, const Box&) = default;
};

Box operator+(const Box& a, const Box& b);
Box operator-(const Box& a, const Box& b);
Box operator*(const Box& a, const Box& b);
/// Enclosure of 1/b; throws ZeroBase when b contains zero.
Box reciprocal(const Box& b);
/// Enclosure of |z|^2 over the box.
Interval normSquared(const Box& b);
bool intersects(const Box& a, const Box& b);
Box intersect(const Box& a, const Box& b);
Box roundOut(const Box& a, int bits);
Box conj(const Box& b);

std::string toString(const Interval& a);

}  // namespace wcm::exact
