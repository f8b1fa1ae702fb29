#pragma once

// Brute-force reference computations used by the unit tests and the
// acceptance suite. Everything here is deliberately naive.

#include "wcm/core.hpp"
#include "wcm/exact/poly.hpp"
#include "wcm/rootsys.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace wcm::oracle {

/// Signed permutation: image[i] = +-(j+1) when e_i maps to +-e_j.
using SignedPerm = std::vector<int>;

SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b
SignedPerm inverse(const SignedPerm& a);

/// Weyl group of a classical type as signed permutations of the ambient
/// coordinates, generated by simple reflections and closed under products.
std::vector<SignedPerm> weylGroupByReflections(const rootsys::RootSystemType& type);

/// Number of conjugacy classes of a finite group given as an element list.
std::size_t conjugacyClassCount(const std::vector<SignedPerm>& group);

/// Exponent vectors a with |a_i| <= bound and prod nums[i]^a[i] = 1, found by
/// comparing prime-exponent vectors and signs.
std::vector<std::vector<int>> rationalRelationsBrute(const std::vector<Rational>& nums, int bound);

/// Whether prod xs^a = prod ys^b != 1 for some |a_i|, |b_j| <= bound.
bool rationalWeaklyCommensurableBrute(const std::vector<Rational>& xs, const std::vector<Rational>& ys, int bound);

/// Order of the Galois group of a monic integer polynomial of degree <= 4,
/// read off the degree of an irreducible factor of the resolvent
/// prod over permutations s of (t - sum c_i alpha_s(i)), whose coefficients are
/// recovered exactly from certified root enclosures.
int galoisGroupOrderByResolvent(const exact::PolyQ& f);

}  // namespace wcm::oracle
