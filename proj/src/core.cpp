#include "wcm/core.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cctype>
#include <map>

namespace wcm {

std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonZeroTrace: return "NonZeroTrace";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::ZeroBase: return "ZeroBase";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::FiniteOrder: return "FiniteOrder";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::RamifiedPrime: return "RamifiedPrime";
    case ErrorKind::NotPalindromic: return "NotPalindromic";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::RootAtOne: return "RootAtOne";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

Integer parseInteger(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  Integer z(std::string(s.substr(i)));
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(text, text));
  const Integer n = parseInteger(text.substr(0, slash), text);
  const auto dpart = text.substr(slash + 1);
  if (!dpart.empty() && (dpart.front() == '-' || dpart.front() == '+'))
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  const Integer d = parseInteger(dpart, text);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string toString(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string toString(const Integer& z) { return z.str(); }

namespace {

// Brent's variant; n odd composite.
Integer rho(const Integer& n) {
  for (Integer c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = boost::multiprecision::gcd(x > y ? Integer(x - y) : Integer(y - x), n);
    }
    if (d != n) return d;
  }
}

void splitInto(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (boost::multiprecision::miller_rabin_test(n, 40)) {
    ++out[n];
    return;
  }
  const Integer d = rho(n);
  splitInto(d, out);
  splitInto(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factorInteger(Integer n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorInteger needs n >= 1");
  std::map<Integer, int> found;
  for (unsigned p = 2; p < 1000 && Integer(p) * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++found[Integer(p)];
    }
  if (n > 1 && n < 1000000) {
    ++found[n];
  } else {
    splitInto(n, found);
  }
  return {found.begin(), found.end()};
}

}  // namespace wcm
