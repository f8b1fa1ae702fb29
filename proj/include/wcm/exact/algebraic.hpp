#pragma once

#include "wcm/exact/interval.hpp"
#include "wcm/exact/poly.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace wcm::exact {

/// Exact algebraic number: a monic irreducible minimal polynomial together
/// with the index of the root in the canonical root order of that polynomial
/// (see isolateRoots). Isolating boxes are derived on demand and cached per
/// polynomial, so equality is structural and exact.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  explicit AlgebraicNumber(const Rational& q);

  /// The index-th root of a monic irreducible polynomial.
  static AlgebraicNumber root(const PolyQ& minpoly, int index);
  /// All roots of a monic irreducible polynomial, canonical order.
  static std::vector<AlgebraicNumber> roots(const PolyQ& minpoly);

  const PolyQ& minpoly() const { return minpoly_; }
  int index() const { return index_; }
  int degree() const { return minpoly_.degree(); }
  bool isRational() const { return degree() == 1; }
  Rational rationalValue() const;
  bool isReal() const;
  bool isZero() const { return isRational() && minpoly_[0] == 0; }

  /// Isolating box of width at most 2^-bits.
  Box enclosure(int bits) const;
  /// Box of width at most 2^-8, the one reported to users.
  Box box() const { return enclosure(8); }

  std::string str() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.index_ == b.index_ && a.minpoly_ == b.minpoly_;
  }
  /// Canonical total order: degree, coefficients, root index.
  friend std::strong_ordering operator<=>(const AlgebraicNumber& a, const AlgebraicNumber& b);

 private:
  AlgebraicNumber(PolyQ minpoly, int index) : minpoly_(std::move(minpoly)), index_(index) {}
  PolyQ minpoly_;
  int index_ = 0;
};

/// Roots of f with multiplicity: factors in canonical order, then roots of
/// each factor in canonical order, each repeated by its multiplicity.
std::vector<AlgebraicNumber> rootsWithMultiplicity(const PolyQ& f, int maxDegree);

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
/// Throws ZeroBase for zero.
AlgebraicNumber inverse(const AlgebraicNumber& a);
AlgebraicNumber conjugate(const AlgebraicNumber& a);
/// a^e for any integer e; throws ZeroBase for a = 0 and e < 0.
AlgebraicNumber power(const AlgebraicNumber& a, long e);
/// prod nums[i]^exponents[i]
AlgebraicNumber algebraicProduct(const std::vector<AlgebraicNumber>& nums, const std::vector<long>& exponents);

bool equalsOne(const AlgebraicNumber& a);
/// Multiplicative order if a is a root of unity.
std::optional<int> rootOfUnityOrder(const AlgebraicNumber& a);

/// Rational interval of width at most 2^-bits containing log|a|; a != 0.
Interval certifiedLog(const AlgebraicNumber& a, int bits);
/// Rational interval of width at most 2^-bits containing arg(a) in (-pi, pi].
Interval certifiedArg(const AlgebraicNumber& a, int bits);
/// Rational interval of width at most 2^-bits containing pi.
Interval certifiedPi(int bits);

/// Interval of width at most 2^-bits containing log(x) for rational x > 0.
Interval certifiedLogRational(const Rational& x, int bits);

}  // namespace wcm::exact
