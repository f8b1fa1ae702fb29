#pragma once

#include "wcm/exact/algebraic.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcm::app {

using nlohmann::json;

/// Input problem that cannot be accepted; `line` is 1-based.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parsed JSON together with the source line of every value, keyed by JSON
/// pointer. Typed accessors raise ValidationError at the offending line.
class Document {
 public:
  explicit Document(const std::string& text);

  const json& root() const { return root_; }
  bool has(const std::string& ptr) const;
  const json& get(const std::string& ptr) const;
  int lineOf(const std::string& ptr) const;
  [[noreturn]] void fail(const std::string& ptr, const std::string& message) const;

  Rational rational(const std::string& ptr) const;
  std::vector<Rational> rationals(const std::string& ptr) const;
  long integer(const std::string& ptr, long lo, long hi) const;
  std::uint64_t unsigned64(const std::string& ptr) const;
  bool boolean(const std::string& ptr) const;
  std::string string(const std::string& ptr) const;
  std::size_t arraySize(const std::string& ptr) const;
  /// Square matrix of rationals.
  MatrixQ matrix(const std::string& ptr) const;
  /// Coefficients, constant term first.
  exact::PolyQ poly(const std::string& ptr) const;
  /// Rejects keys outside `allowed`.
  void onlyKeys(const std::string& ptr, const std::vector<std::string>& allowed) const;

 private:
  json root_;
  std::map<std::string, int> lines_;
};

json toJson(const Rational& q);
json toJson(const Integer& z);
json toJson(const exact::Interval& iv);
json toJson(const exact::PolyQ& f);
/// {minpoly, index, box: {re, im}} with box sides of width <= 2^-24.
json toJson(const exact::AlgebraicNumber& a);

}  // namespace wcm::app
