#pragma once

#include "wcm/core.hpp"

#include <functional>
#include <vector>

// Integer lattices given by row bases.
namespace wcm::exact {

/// LLL reduction (delta = 3/4) of linearly independent integer rows, exact
/// integral variant.
MatrixZ lllReduce(const MatrixZ& rows);

/// Squared Gram-Schmidt norms ||b*_i||^2 of independent rows.
std::vector<Rational> gramSchmidtSquaredNorms(const MatrixZ& rows);

/// Row Hermite normal form: zero rows dropped, pivots positive and strictly
/// increasing in column, entries above each pivot reduced into [0, pivot).
MatrixZ hermiteNormalForm(const MatrixZ& rows);

/// Whether v is an integer combination of the rows of an HNF basis.
bool inLattice(const MatrixZ& hnf, const VectorZ& v);

/// Calls visit(v) for every nonzero lattice vector v with ||v||^2 <= radiusSquared,
/// one representative of each pair +-v. The basis rows must be independent.
void enumerateShortVectors(const MatrixZ& basis, const Integer& radiusSquared,
                           const std::function<void(const VectorZ&)>& visit);

}  // namespace wcm::exact
