#pragma once

#include "tightspan/rational.hpp"

#include <optional>
#include <vector>

namespace tightspan {

using RationalMatrix = std::vector<RationalVector>;

/// Rank of the row set, exact.
int rank(RationalMatrix rows);
int rank(const std::vector<IntVector>& rows);

/// Basis of {x : rows * x = 0}, each vector primitive integer.
std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, int columns);

/// Solves the square system A x = b; nullopt when A is singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(std::vector<IntVector> m);

/// Affine rank of a point set (dimension of its affine hull); -1 when empty.
int affine_dimension(const std::vector<RationalVector>& points);

}  // namespace tightspan
