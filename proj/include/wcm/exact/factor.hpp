#pragma once

#include "wcm/exact/poly.hpp"

#include <utility>
#include <vector>

namespace wcm::exact {

/// Degree limit for polynomials supplied by callers (characteristic polynomials,
/// minimal polynomials of inputs).
inline constexpr int kMaxInputDegree = 12;
/// Degree limit for intermediate products built from composed resultants.
inline constexpr int kMaxInternalDegree = 64;

/// Irreducible factorization over Q: monic factors with multiplicities, sorted
/// by degree and then coefficients. Constant inputs yield an empty list.
std::vector<std::pair<PolyQ, int>> factorQ(const PolyQ& f, int maxDegree = kMaxInternalDegree);

bool isIrreducibleQ(const PolyQ& f, int maxDegree = kMaxInternalDegree);

/// Canonical order on monic factors: degree first, then coefficients.
bool canonicalLess(const PolyQ& a, const PolyQ& b);

}  // namespace wcm::exact
