#pragma once

#include "wcm/core.hpp"

#include <optional>

// Exact Gaussian elimination over Q.
namespace wcm::exact {

/// Reduced row echelon form; pivotColumns receives the pivot column of each nonzero row.
MatrixQ rref(const MatrixQ& a, std::vector<Eigen::Index>* pivotColumns = nullptr);

Eigen::Index rank(const MatrixQ& a);

/// Columns form a basis of {x : a x = 0}.
MatrixQ nullspace(const MatrixQ& a);

/// Some solution of a x = b, or nothing when the system is inconsistent.
std::optional<VectorQ> solve(const MatrixQ& a, const VectorQ& b);

/// Inverse of a square matrix; throws InvalidArgument when singular.
MatrixQ inverse(const MatrixQ& a);

Rational determinant(const MatrixQ& a);

}  // namespace wcm::exact
