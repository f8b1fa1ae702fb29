#pragma once

#include "wcm/core.hpp"

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

// Root systems of types A-D in their standard coordinate realizations, Weyl
// group orders and conjugacy classes. Exceptional types carry metadata only.
namespace wcm::rootsys {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

std::string toString(Family f);
Family parseFamily(std::string_view name);

struct RootSystemType {
  Family family;
  int rank;

  /// Validates rank constraints; exceptional families get their fixed rank.
  RootSystemType(Family family, int rank);

  bool classical() const {
    return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
  }
  /// Dimension of the coordinate space the roots live in (rank + 1 for A).
  int ambientDimension() const;
  std::string name() const;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

enum class LengthClass { Long, Short, SimplyLaced };

struct RootVector {
  std::vector<int> coords;
  LengthClass lengthClass;

  int squaredLength() const;
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// Conjugacy class of a Weyl group as a (signed) cycle type. For family A only
/// `positive` is used (a partition of n). For B/C/D `negative` holds the
/// lengths of negative cycles. Parts are stored in non-increasing order.
struct WeylClassDescriptor {
  std::vector<int> positive;
  std::vector<int> negative;

  WeylClassDescriptor() = default;
  WeylClassDescriptor(std::vector<int> pos, std::vector<int> neg = {});

  int degree() const;
  bool isIdentity() const { return negative.empty() && std::all_of(positive.begin(), positive.end(), [](int p) { return p == 1; }); }
  std::string str() const;

  friend auto operator<=>(const WeylClassDescriptor&, const WeylClassDescriptor&) = default;
  friend bool operator==(const WeylClassDescriptor&, const WeylClassDescriptor&) = default;
};

/// Full root set, sorted lexicographically on coordinates.
std::vector<RootVector> roots(const RootSystemType& type);

Integer weylOrder(const RootSystemType& type);

/// Whether the map alpha -> -alpha lies in the Weyl group.
bool minusOneInWeyl(const RootSystemType& type);

/// All conjugacy classes including the identity. D-type classes are collapsed
/// to their signed cycle type (very even classes are not split).
std::vector<WeylClassDescriptor> conjugacyClasses(const RootSystemType& type);

/// Number of very even classes merged by the D-type collapse (0 otherwise).
int collapsedClassCount(const RootSystemType& type);

/// All partitions of n, parts in non-increasing order, in reverse lexicographic order.
std::vector<std::vector<int>> partitions(int n);

/// Sum over all roots of <alpha, x>^2.
template <class Scalar>
Scalar quadraticSum(const RootSystemType& type, const VectorX<Scalar>& x);

/// Constant c with quadraticSum(type, x) = c |x|^2.
Rational casimirConstant(const RootSystemType& type);

/// Type of the subgroup generated by the torus and long-root subgroups, when
/// it differs from the whole group; empty for simply laced types.
std::string longRootSubgroupType(const RootSystemType& type);

bool simplyLaced(Family f);

// ---------------------------------------------------------------------------

namespace detail {
void checkQuadraticInput(const RootSystemType& type, Eigen::Index size, bool traceIsZero);
}

template <class Scalar>
Scalar quadraticSum(const RootSystemType& type, const VectorX<Scalar>& x) {
  Scalar trace = Scalar(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) trace += x[i];
  detail::checkQuadraticInput(type, x.size(), trace == Scalar(0));
  Scalar total = Scalar(0);
  for (const auto& root : roots(type)) {
    Scalar pairing = Scalar(0);
    for (std::size_t i = 0; i < root.coords.size(); ++i)
      if (root.coords[i] != 0) pairing += Scalar(root.coords[i]) * x[static_cast<Eigen::Index>(i)];
    total += pairing * pairing;
  }
  return total;
}

}  // namespace wcm::rootsys
