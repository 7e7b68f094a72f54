#pragma once
/**
 * @file wronskian.hpp
 * @brief Wronskian determinants of polynomial tuples, computed fraction-free.
 */

#include <vector>

#include "bp/poly.hpp"

namespace bp {

/**
 * Determinant of a square matrix of polynomials via the fraction-free
 * (Bareiss) scheme; every interior division is exact by construction.
 */
Poly poly_determinant(std::vector<std::vector<Poly>> m);

/**
 * Wronskian W(f_1, ..., f_n) = det[ d^{i} f_j / dx^{i} ], rows i = 0..n-1.
 * The empty tuple yields 1.
 */
Poly wronskian(const std::vector<Poly>& fs);

}  // namespace bp
