#pragma once

#include "wcm/core.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace wcm::exact {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients and degree -1.
template <class Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Scalar& a) { return Poly(std::vector<Scalar>{a}); }
  static Poly monomial(int degree, const Scalar& a = Scalar(1)) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = a;
    return Poly(std::move(c));
  }
  /// t - a
  static Poly linear(const Scalar& a) { return Poly({Scalar(-a), Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const Scalar& leading() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar operator[](int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Scalar(0);
  }

  template <class T>
  T operator()(const T& x) const {
    T acc = T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& a) {
    for (auto& x : c_) x *= a;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// t^deg * p(1/t)
  Poly reversed() const { return Poly(std::vector<Scalar>(c_.rbegin(), c_.rend())); }

  std::string str(const char* var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using PolyQ = Poly<Rational>;
using PolyZ = Poly<Integer>;

template <class Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p) {
  std::vector<Scalar> out;
  for (int k = 1; k <= p.degree(); ++k) out.push_back(p[k] * Scalar(k));
  return Poly<Scalar>(std::move(out));
}

template <class Scalar>
std::string Poly<Scalar>::str(const char* var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const bool negative = a < 0;
    const Scalar mag = negative ? Scalar(-a) : a;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1 || k == 0) out += wcm::toString(mag);
    if (k > 0) {
      if (mag != 1) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

// --- polynomials over Q ----------------------------------------------------

/// Quotient and remainder; `b` must be nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
PolyQ operator/(const PolyQ& a, const PolyQ& b);
PolyQ operator%(const PolyQ& a, const PolyQ& b);

PolyQ monic(const PolyQ& p);
/// Monic gcd (zero if both inputs are zero).
PolyQ gcd(const PolyQ& a, const PolyQ& b);
bool isSquarefree(const PolyQ& p);
/// Product of the distinct monic irreducible factors.
PolyQ squarefreePart(const PolyQ& p);
/// Yun decomposition: pairs (monic squarefree, multiplicity), pairwise coprime.
std::vector<std::pair<PolyQ, int>> squarefreeDecomposition(const PolyQ& p);

/// Integer primitive polynomial with positive leading coefficient, proportional to p.
PolyZ primitiveIntegerPart(const PolyQ& p);
PolyQ toRational(const PolyZ& p);
Integer content(const PolyZ& p);

/// Power sums p_1..p_count of the roots of p (with multiplicity).
std::vector<Rational> powerSums(const PolyQ& p, int count);
/// Monic polynomial of the given degree whose roots have power sums `sums`.
PolyQ fromPowerSums(const std::vector<Rational>& sums, int degree);

/// Monic polynomial whose roots are all products a_i * b_j (resultant Res_y(f(y), y^n g(t/y))).
PolyQ composedProduct(const PolyQ& f, const PolyQ& g);
/// Monic polynomial whose roots are all sums a_i + b_j.
PolyQ composedSum(const PolyQ& f, const PolyQ& g);
/// Monic polynomial whose roots are a_i^e, e >= 1.
PolyQ rootPower(const PolyQ& f, int e);
/// Monic polynomial whose roots are 1/a_i; requires f(0) != 0.
PolyQ rootInverse(const PolyQ& f);

/// k-th cyclotomic polynomial.
PolyZ cyclotomic(int k);
int eulerPhi(int k);

/// Self-reciprocal up to sign: t^d f(1/t) = +-f.
bool isSelfReciprocal(const PolyQ& f);

/// Multiplicity of a as a root of f.
int rootMultiplicity(const PolyQ& f, const Rational& a);

/// Characteristic polynomial det(t I - A), monic.
PolyQ characteristicPolynomial(const MatrixQ& a);
/// p(A)
MatrixQ evaluateAt(const PolyQ& p, const MatrixQ& a);

}  // namespace wcm::exact
