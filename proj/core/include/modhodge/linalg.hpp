#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modhodge/laurent.hpp"
#include "modhodge/rational.hpp"

namespace modhodge {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t rank(const RationalMatrix& rows);

/// Determinant of a square integer matrix.
long integerDeterminant(const std::vector<std::vector<int>>& m);

/// Determinant of a square rational matrix.
Rational determinant(RationalMatrix m);

/// Solution x of A x = b when one exists. A is given by rows; when the
/// solution is not unique, free variables are set to zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Determinant of a square matrix of Laurent polynomials by cofactor
/// expansion (intended for sizes up to about 6).
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m, std::size_t nvars);

}  // namespace modhodge
