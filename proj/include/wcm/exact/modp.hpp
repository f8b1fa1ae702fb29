#pragma once

#include "wcm/exact/poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace wcm::exact {

/// Polynomial over F_p, p < 2^31, coefficients ascending in [0, p).
class PolyModP {
 public:
  PolyModP(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  explicit PolyModP(std::uint64_t p) : p_(p) {}

  static PolyModP one(std::uint64_t p) { return PolyModP(p, {1}); }
  static PolyModP x(std::uint64_t p) { return PolyModP(p, {0, 1}); }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  bool isOne() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t leading() const { return c_.back(); }
  std::uint64_t operator[](int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : 0;
  }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t evaluate(std::uint64_t x) const;

  friend bool operator==(const PolyModP&, const PolyModP&) = default;
  friend bool operator<(const PolyModP& a, const PolyModP& b);

  std::string str() const;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool isPrime(std::uint64_t n);
/// Primes in [lo, hi].
std::vector<std::uint64_t> primesInRange(std::uint64_t lo, std::uint64_t hi);

PolyModP operator+(const PolyModP& a, const PolyModP& b);
PolyModP operator-(const PolyModP& a, const PolyModP& b);
PolyModP operator*(const PolyModP& a, const PolyModP& b);
PolyModP operator*(const PolyModP& a, std::uint64_t s);
std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP operator/(const PolyModP& a, const PolyModP& b);
PolyModP operator%(const PolyModP& a, const PolyModP& b);
PolyModP monic(const PolyModP& a);
PolyModP gcd(const PolyModP& a, const PolyModP& b);
/// Returns (g, s, t) with s a + t b = g, g monic.
struct ExtendedGcd {
  PolyModP g, s, t;
};
ExtendedGcd extendedGcd(const PolyModP& a, const PolyModP& b);
PolyModP derivative(const PolyModP& a);
/// base^e mod m
PolyModP powmod(const PolyModP& base, const Integer& e, const PolyModP& m);
/// t^deg * a(1/t), made monic; the reciprocal of a polynomial with a(0) != 0.
PolyModP reciprocal(const PolyModP& a);

/// Reduction of an integer/rational polynomial; p must not divide a denominator.
PolyModP reduce(const PolyQ& f, std::uint64_t p);
PolyModP reduce(const PolyZ& f, std::uint64_t p);

/// Complete factorization of a monic polynomial into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<PolyModP, int>> factorMonic(const PolyModP& f);
bool isIrreducible(const PolyModP& f);

struct FactorizationModP {
  std::uint64_t p;
  std::uint64_t leading;  // leading coefficient of the reduction
  std::vector<std::pair<PolyModP, int>> factors;

  /// Degrees of the irreducible factors, repeated by multiplicity, non-increasing.
  std::vector<int> degreePattern() const;
  bool squarefree() const;
  /// leading * product of factors^multiplicity
  PolyModP product() const;
};

/// Irreducible factorization of f mod p. Throws BadPrime if p divides a
/// denominator or the leading coefficient of the denominator-cleared polynomial.
FactorizationModP factorModP(const PolyQ& f, std::uint64_t p);

}  // namespace wcm::exact
