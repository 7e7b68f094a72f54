#pragma once
/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over the rationals, plus echelonization of
 *        polynomial families used to canonicalize space bases.
 */

#include <optional>
#include <vector>

#include "bp/poly.hpp"
#include "bp/rational.hpp"

namespace bp {

using Matrix = std::vector<std::vector<Rational>>;

/// Rank of a matrix via exact Gaussian elimination.
int matrix_rank(Matrix m);

/**
 * Solve m * x = rhs exactly.  Returns std::nullopt when the system is
 * inconsistent; when underdetermined, free variables are set to zero.
 */
std::optional<std::vector<Rational>> solve_linear(Matrix m, std::vector<Rational> rhs);

/// Determinant of a square matrix, exact.
Rational determinant(Matrix m);

/**
 * Coordinates of target in the span of the given polynomials, or std::nullopt
 * when target lies outside the span.  The family need not be independent; when
 * it is, the coordinates are unique.
 */
std::optional<std::vector<Rational>> coordinates_in_span(const std::vector<Poly>& family,
                                                         const Poly& target);

/// Dimension of the span of a polynomial family.
int span_dimension(const std::vector<Poly>& family);

/**
 * Canonical reduced basis of the span of a polynomial family: pairwise
 * distinct degrees in ascending order, each element monic, and each element
 * having coefficient zero at every other element's degree.  This normal form
 * depends only on the span.
 */
std::vector<Poly> echelon_basis(std::vector<Poly> family);

}  // namespace bp
