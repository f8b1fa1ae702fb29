#include "wcm/rootsys.hpp"

#include <numeric>
#include <sstream>

namespace wcm::rootsys {

std::string toString(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parseFamily(std::string_view name) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8,
                   Family::F4, Family::G2})
    if (toString(f) == name) return f;
  throw Error(ErrorKind::InvalidArgument, "unknown root system family '" + std::string(name) + "'");
}

namespace {

int fixedRank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void requireClassical(const RootSystemType& type) {
  if (!type.classical())
    throw Error(ErrorKind::UnsupportedFamily, type.name() + " carries metadata only");
}

void partitionsInto(int n, int maxPart, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, maxPart); part >= 1; --part) {
    current.push_back(part);
    partitionsInto(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

RootSystemType::RootSystemType(Family f, int r) : family(f), rank(r) {
  if (const int fixed = fixedRank(f); fixed != 0) {
    if (r != 0 && r != fixed)
      throw Error(ErrorKind::InvalidArgument, toString(f) + " has rank " + std::to_string(fixed));
    rank = fixed;
    return;
  }
  const int minimum = f == Family::A ? 1 : (f == Family::D ? 3 : 2);
  if (r < minimum)
    throw Error(ErrorKind::InvalidArgument,
                toString(f) + " requires rank >= " + std::to_string(minimum) + ", got " + std::to_string(r));
}

int RootSystemType::ambientDimension() const { return family == Family::A ? rank + 1 : rank; }

std::string RootSystemType::name() const {
  if (!classical()) return toString(family);
  return toString(family) + std::to_string(rank);
}

int RootVector::squaredLength() const {
  return std::inner_product(coords.begin(), coords.end(), coords.begin(), 0);
}

WeylClassDescriptor::WeylClassDescriptor(std::vector<int> pos, std::vector<int> neg)
    : positive(std::move(pos)), negative(std::move(neg)) {
  std::sort(positive.begin(), positive.end(), std::greater<>());
  std::sort(negative.begin(), negative.end(), std::greater<>());
}

int WeylClassDescriptor::degree() const {
  return std::accumulate(positive.begin(), positive.end(), 0) +
         std::accumulate(negative.begin(), negative.end(), 0);
}

std::string WeylClassDescriptor::str() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& parts) {
    os << '[';
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ']';
  };
  list(positive);
  if (!negative.empty()) {
    os << '-';
    list(negative);
  }
  return os.str();
}

std::vector<RootVector> roots(const RootSystemType& type) {
  requireClassical(type);
  const int n = type.ambientDimension();
  std::vector<RootVector> out;
  auto unit = [n](int i, int scale) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = scale;
    return v;
  };
  if (type.family == Family::A) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          auto v = unit(i, 1);
          v[static_cast<std::size_t>(j)] = -1;
          out.push_back({v, LengthClass::SimplyLaced});
        }
  } else {
    const LengthClass pairClass = type.family == Family::B   ? LengthClass::Long
                                  : type.family == Family::C ? LengthClass::Short
                                                             : LengthClass::SimplyLaced;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            auto v = unit(i, si);
            v[static_cast<std::size_t>(j)] = sj;
            out.push_back({v, pairClass});
          }
    if (type.family == Family::B)
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) out.push_back({unit(i, s), LengthClass::Short});
    if (type.family == Family::C)
      for (int i = 0; i < n; ++i)
        for (int s : {2, -2}) out.push_back({unit(i, s), LengthClass::Long});
  }
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) { return a.coords < b.coords; });
  return out;
}

Integer weylOrder(const RootSystemType& type) {
  switch (type.family) {
    case Family::A: return factorial(type.rank + 1);
    case Family::B:
    case Family::C: return (Integer(1) << type.rank) * factorial(type.rank);
    case Family::D: return (Integer(1) << (type.rank - 1)) * factorial(type.rank);
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    case Family::F4: return 1152;
    case Family::G2: return 12;
  }
  return 0;
}

bool minusOneInWeyl(const RootSystemType& type) {
  switch (type.family) {
    case Family::A: return type.rank == 1;
    case Family::D: return type.rank % 2 == 0;
    case Family::E6: return false;
    default: return true;
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitionsInto(n, n, current, out);
  return out;
}

std::vector<WeylClassDescriptor> conjugacyClasses(const RootSystemType& type) {
  std::vector<WeylClassDescriptor> out;
  switch (type.family) {
    case Family::A:
      for (auto& p : partitions(type.rank + 1)) out.emplace_back(p);
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int k = 0; k <= type.rank; ++k)
        for (auto& pos : partitions(k))
          for (auto& neg : partitions(type.rank - k))
            if (type.family != Family::D || neg.size() % 2 == 0) out.emplace_back(pos, neg);
      break;
    default:
      throw Error(ErrorKind::UnsupportedFamily, type.name() + " carries metadata only");
  }
  std::sort(out.begin(), out.end());
  return out;
}

int collapsedClassCount(const RootSystemType& type) {
  if (type.family != Family::D || type.rank % 2 != 0) return 0;
  int count = 0;
  for (auto& p : partitions(type.rank))
    if (std::all_of(p.begin(), p.end(), [](int part) { return part % 2 == 0; })) ++count;
  return count;
}

Rational casimirConstant(const RootSystemType& type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return Rational(2 * (n + 1));
    case Family::B: return Rational(4 * n - 2);
    case Family::C: return Rational(4 * n + 4);
    case Family::D: return Rational(4 * (n - 1));
    default: throw Error(ErrorKind::UnsupportedFamily, type.name() + " carries metadata only");
  }
}

std::string longRootSubgroupType(const RootSystemType& type) {
  switch (type.family) {
    case Family::C: return "(A1)^" + std::to_string(type.rank);
    case Family::B: return "D" + std::to_string(type.rank);
    case Family::F4: return "D4";
    case Family::G2: return "A2";
    default: return "";
  }
}

bool simplyLaced(Family f) {
  return f == Family::A || f == Family::D || f == Family::E6 || f == Family::E7 || f == Family::E8;
}

namespace detail {

void checkQuadraticInput(const RootSystemType& type, Eigen::Index size, bool traceIsZero) {
  requireClassical(type);
  if (size != type.ambientDimension())
    throw Error(ErrorKind::DimensionMismatch, "expected vector of length " +
                                                  std::to_string(type.ambientDimension()) + " for " +
                                                  type.name() + ", got " + std::to_string(size));
  if (type.family == Family::A && !traceIsZero)
    throw Error(ErrorKind::NonZeroTrace, "family A vectors must have coordinate sum 0");
}

}  // namespace detail

}  // namespace wcm::rootsys
