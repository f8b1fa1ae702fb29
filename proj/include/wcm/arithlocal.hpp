#pragma once

#include "wcm/exact/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Local invariants over Q: Hilbert symbols, Witt indices, quaternion
// ramification, and the B_n / C_n twins test.
namespace wcm::arithlocal {

using exact::PolyQ;

struct Place {
  std::uint64_t p = 0;  // 0 is the real place

  static Place infinity() { return {}; }
  /// Throws BadPrime unless p is prime.
  static Place prime(std::uint64_t p);
  bool infinite() const { return p == 0; }
  std::string str() const;

  friend auto operator<=>(const Place&, const Place&) = default;
};

/// (a, b)_v in {+1, -1}. Throws ZeroBase for a zero argument.
int hilbertSymbol(const Rational& a, const Rational& b, const Place& v);

struct QuadraticForm {
  std::vector<Rational> diag;  // nonzero entries
};

/// prod_{i<j} (a_i, a_j)_v.
int hasseInvariant(const QuadraticForm& q, const Place& v);

/// Throws InvalidArgument for an empty form or a zero coefficient.
int wittIndex(const QuadraticForm& q, const Place& v);

struct QuaternionAlgebra {
  Rational a, b;
};

bool quaternionSplits(const QuaternionAlgebra& h, const Place& v);

/// The real place, 2, and every prime dividing a numerator or denominator.
std::vector<Place> relevantPlaces(const std::vector<Rational>& numbers);

struct TwinsRow {
  Place place;
  int wittIndex = 0;
  int hilbert = 1;
  bool bSplit = false, bAnisotropic = false;
  bool cSplit = false, cAnisotropic = false;
  bool agree = false;
};

struct TwinsVerdict {
  bool twins = false;
  int n = 0;
  std::vector<TwinsRow> table;  // real place first, then primes ascending
};

/// B side SO(q) with dim q = 2n+1, C side SU_n over the quaternion algebra,
/// with the hermitian form definite at the real place when the flag is set.
/// Throws BadDimension unless dim q is odd and at least 7.
TwinsVerdict twins(const QuadraticForm& q, const QuaternionAlgebra& h, bool hermitianDefiniteAtInfinity);

/// (t - 1) f. Throws RootAtOne, NotSquarefree, NotPalindromic (reversal is not
/// +-f) in that order,
/// and BadDimension for odd or zero degree.
PolyQ bcTorusCorrespondence(const PolyQ& f);

/// Orbits of t -> 1/t on the roots of f. Throws NotPalindromic, NotSquarefree.
int fixedDimension(const PolyQ& f);

}  // namespace wcm::arithlocal
