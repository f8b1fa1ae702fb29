#pragma once

#include "wcm/exact/algebraic.hpp"
#include "wcm/rootsys.hpp"
#include "wcm/weakcomm.hpp"

#include <optional>
#include <vector>

// Lengths of closed geodesics from hyperbolic and split-torus elements.
namespace wcm::spectra {

using exact::AlgebraicNumber;
using exact::Interval;
using rootsys::RootSystemType;
using weakcomm::SemisimpleElement;

struct GeodesicLength {
  AlgebraicNumber t;        // real, > 1
  int windingDivisor = 1;
  Interval numeric;         // encloses (2 / windingDivisor) log t
};

/// Validates t > 1 (InvalidArgument otherwise); interval width <= 2^-bits.
GeodesicLength makeLength(const AlgebraicNumber& t, int windingDivisor = 1, int bits = 64);

/// SL_2 only; t is the eigenvalue of +-g above 1. Throws NotHyperbolic when
/// |trace| <= 2 and DimensionMismatch for other groups.
GeodesicLength hyperbolicLength(const SemisimpleElement& g, int bits = 64);

struct SpectrumEntry {
  std::vector<int> word;  // letter 2i is generator i, 2i+1 its inverse
  GeodesicLength length;
};

struct SpectrumSample {
  std::vector<SpectrumEntry> entries;  // ascending in t, one per distinct t
  std::vector<MatrixQ> generators;
};

/// Freely reduced words of length 1..wordLength in SL_2(Q) generators; the
/// shortlex-first word is kept for each distinct t. Throws InvalidArgument
/// for a generator outside SL_2(Q).
SpectrumSample rationalLengthSpectrum(const std::vector<MatrixQ>& generators, int wordLength, int bits = 64);

/// Eigenvalues of an element of a split torus, as a full list: rank + 1
/// numbers with product 1 for A, 2 rank (+1 for B) numbers closed under
/// inversion otherwise, with B carrying an extra 1.
struct SplitTorusElement {
  RootSystemType type;
  std::vector<AlgebraicNumber> eigenvalues;

  /// Throws DimensionMismatch on a wrong count, InvalidArgument when the
  /// family constraint fails.
  SplitTorusElement(RootSystemType type, std::vector<AlgebraicNumber> eigenvalues);
  /// One log|.| per coordinate of the standard realization.
  std::vector<Interval> logCoords(int bits) const;
  /// Coordinates as eigenvalues, one representative per inverse pair.
  const std::vector<AlgebraicNumber>& coordinates() const { return coords_; }

 private:
  std::vector<AlgebraicNumber> coords_;
};

struct LambdaSquared {
  Interval value;  // width <= 2^-bits
  /// When every eigenvalue is rational: value = sum form(i,j) log bases[i] log bases[j].
  std::vector<Integer> bases;
  std::optional<MatrixQ> form;
};

/// Sum over all roots of (log |alpha(e)|)^2.
LambdaSquared lambdaGamma(const SplitTorusElement& e, int bits = 64);

struct LengthRatio {
  long m = 0, n = 0;  // t1^m = t2^n, minimal
  Rational lengthRatio;  // l1 / l2
};

/// Minimal (m, n) with 1 <= m, n <= bound, or nullopt (no relation up to bound).
std::optional<LengthRatio> ratioRational(const GeodesicLength& l1, const GeodesicLength& l2, int bound);

struct LengthComparison {
  std::vector<std::vector<std::optional<LengthRatio>>> table;
  bool aggregate = false;
};

/// Throws InvalidArgument for an empty sample.
LengthComparison lengthCommensurableSamples(const SpectrumSample& s1, const SpectrumSample& s2, int bound);

/// quadraticSum(C_n, x) / quadraticSum(B_n, x). Throws ZeroVector,
/// InvalidArgument for n < 2, DimensionMismatch when x does not have n entries.
Rational bcScalingCheck(int n, const VectorQ& x);

}  // namespace wcm::spectra
