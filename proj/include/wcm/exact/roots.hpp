#pragma once

#include "wcm/exact/interval.hpp"
#include "wcm/exact/poly.hpp"

#include <vector>

namespace wcm::exact {

/// Certified isolating boxes for all complex roots of an irreducible f.
///
/// Real roots come first in descending order, with boxes lying on the real
/// axis (zero-width imaginary part); they are followed by the non-real roots
/// ordered by real part and then imaginary part, both descending. Each box
/// contains exactly one root and boxes are pairwise disjoint. Boxes have
/// width at most 2^-bits.
std::vector<Box> isolateRoots(const PolyQ& f, int bits);

/// Narrows previously isolated boxes (same order) to width at most 2^-bits.
std::vector<Box> refineRoots(const PolyQ& f, const std::vector<Box>& boxes, int bits);

/// Bisects an isolating interval of a real root of f (sign change at the
/// endpoints) down to width 2^-bits.
Interval refineRealRoot(const PolyQ& f, const Interval& isolating, int bits);

}  // namespace wcm::exact
