#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcm {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using MatrixZ = MatrixX<Integer>;
using VectorZ = VectorX<Integer>;

enum class ErrorKind {
  InvalidArgument,
  UnsupportedFamily,
  DimensionMismatch,
  NonZeroTrace,
  BadPrime,
  ZeroBase,
  DegreeTooLarge,
  NotSemisimple,
  FiniteOrder,
  PrecisionExhausted,
  RamifiedPrime,
  NotPalindromic,
  NotSquarefree,
  BudgetExhausted,
  NotGeneric,
  UnsupportedGroup,
  HypothesisViolated,
  NotHyperbolic,
  ZeroVector,
  BadDimension,
  RootAtOne,
  ParseError,
};

std::string_view toString(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(toString(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parses "p/q", "p", or "-p/q" into an exact rational; rejects zero denominators.
Rational parseRational(std::string_view text);

std::string toString(const Rational& q);
std::string toString(const Integer& z);

/// Prime factorization of n >= 1, primes ascending (Pollard rho beyond trial division).
std::vector<std::pair<Integer, int>> factorInteger(Integer n);

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace wcm
