#pragma once

#include "wcm/exact/poly.hpp"
#include "wcm/rootsys.hpp"
#include "wcm/weakcomm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Frobenius cycle types of characteristic polynomials and the certificates
// they give for the Galois group of a torus to be the full Weyl group.
namespace wcm::genericity {

using exact::PolyQ;
using rootsys::Family;
using rootsys::RootSystemType;
using rootsys::WeylClassDescriptor;
using weakcomm::GroupDescriptor;
using weakcomm::SemisimpleElement;

/// Rank for which a characteristic polynomial of degree `degree` belongs to
/// the family (A: n-1, B: (n-1)/2, C and D: n/2); throws DimensionMismatch.
int rankFromDegree(Family family, int degree);

/// Coefficient k equals coefficient deg-k.
bool isPalindromic(const PolyQ& f);

/// Frobenius class at p: the degree pattern for A, the signed cycle type for
/// B/C/D (self-reciprocal factor of degree 2d: negative d-cycle; pair of
/// mutually reciprocal degree-d factors: positive d-cycle; t-1 nothing; t+1 a
/// negative 1-cycle). For B one factor t-1 is removed over Q first.
/// Throws RamifiedPrime, NotPalindromic, BadPrime.
WeylClassDescriptor frobeniusPattern(const PolyQ& charpoly, Family family, std::uint64_t p);

enum class Status { Certified, Undetermined, NotRegular, FiniteOrder };
std::string toString(Status s);

struct FrobeniusEvidence {
  std::uint64_t prime;
  WeylClassDescriptor pattern;
};

struct GenericityCertificate {
  Status status = Status::Undetermined;
  RootSystemType type{Family::A, 1};
  /// Classes seen, ascending; the identity is included without a prime.
  std::vector<WeylClassDescriptor> witnessed;
  /// First prime witnessing each nontrivial class, in prime order.
  std::vector<FrobeniusEvidence> evidence;
  /// Unramified primes examined, ascending.
  std::vector<std::uint64_t> primesUsed;
  /// D-type classes are signed cycle types; very even pairs are not told apart.
  bool upToVeryEvenCollapse = false;
};

/// Examines primes up to primeBudget until every class of W(type) has been
/// seen. Throws NotSquarefree, NotPalindromic (B/C/D), DimensionMismatch.
GenericityCertificate certifyGenericPoly(const PolyQ& charpoly, const RootSystemType& type, std::uint64_t primeBudget);

/// Regularity and infinite order first, then certifyGenericPoly on the
/// characteristic polynomial (with the factor t-1 removed for SO(3)).
GenericityCertificate isGenericElement(const SemisimpleElement& g, std::uint64_t primeBudget);

struct CongruenceSieve {
  RootSystemType type{Family::A, 1};
  /// One distinct prime per nontrivial class of W.
  std::vector<std::pair<std::uint64_t, WeylClassDescriptor>> constraints;
  /// Monic integer polynomial meeting every constraint (built by CRT).
  PolyQ example;
};

/// Family A, B or C. Primes are drawn from [4 rank + 7, primeBudget] in a
/// seeded order. Throws BudgetExhausted, UnsupportedFamily.
CongruenceSieve buildSieve(const RootSystemType& type, std::uint64_t primeBudget, std::uint64_t seed);

/// Whether f mod p falls into the target class for every constraint.
bool satisfiesSieve(const CongruenceSieve& sieve, const PolyQ& f);

struct WalkEntry {
  std::vector<int> word;  // letter 2i is generator i, 2i+1 its inverse
  MatrixQ matrix;
  Status status;
};

struct WalkSample {
  std::vector<WalkEntry> entries;
  Rational genericProportion;
};

/// `count` words of `length` uniform letters from the generators and their
/// inverses, word w seeded from (seed, w).
WalkSample randomWalkSample(const std::vector<MatrixQ>& generators, const GroupDescriptor& group, int length,
                            int count, std::uint64_t seed, std::uint64_t primeBudget);

/// Commutation test for two certified generic elements of infinite order.
/// Throws NotGeneric otherwise.
bool sameAssociatedTorus(const SemisimpleElement& g1, const SemisimpleElement& g2, std::uint64_t primeBudget);

struct ModPClosure {
  bool generates = false;
  std::uint64_t closureOrder = 0;
  std::uint64_t groupOrder = 0;
};

/// Closure of the reductions mod p inside SL_2(F_p) or SL_3(F_p).
/// Throws BadPrime (p < 5, composite, or a denominator divisible by p) and
/// UnsupportedGroup (other dimensions, or a group too large to enumerate).
ModPClosure generatesModP(const std::vector<MatrixQ>& generators, std::uint64_t p);

struct DichotomyReport {
  RootSystemType type{Family::A, 1};
  bool simplyLaced = false;
  /// "dense" or "G or G_T^>".
  std::string conclusion;
  /// Type of the long-root subgroup for multiply laced families.
  std::string longRootSubgroup;
  std::optional<ModPClosure> corroboration;
};

/// Checks g certified generic of infinite order, x of infinite order, gx != xg;
/// throws HypothesisViolated naming the failed hypothesis.
DichotomyReport dichotomyCheck(const MatrixQ& g, const MatrixQ& x, const RootSystemType& type, std::uint64_t p,
                               std::uint64_t primeBudget);

}  // namespace wcm::genericity
