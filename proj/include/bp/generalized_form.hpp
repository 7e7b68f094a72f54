#pragma once
/**
 * @file generalized_form.hpp
 * @brief Functions of the shape x^a (x-1)^b f(x) with rational exponents a, b
 *        and polynomial f, closed under differentiation.
 *
 * This representation lets factorized differential expressions be applied
 * exactly even when intermediate exponents are rational or negative, with a
 * final normalization step recovering an honest polynomial when one exists.
 */

#include <string>

#include "bp/poly.hpp"
#include "bp/rational.hpp"

namespace bp {

/// x^a * (x-1)^b * f(x).
struct GeneralizedForm {
  Rational a;  ///< exponent of x
  Rational b;  ///< exponent of (x-1)
  Poly f;      ///< polynomial cofactor

  std::string str() const;
};

/// Promote a polynomial: exponents (0, 0).
GeneralizedForm gf_from_poly(const Poly& f);

/**
 * Derivative of x^a (x-1)^b f:
 *   x^{a-1} (x-1)^{b-1} [ a (x-1) f + b x f + x (x-1) f' ].
 * Exact for arbitrary rational exponents.
 */
GeneralizedForm gf_derivative(const GeneralizedForm& g);

/// n-th derivative, n >= 0.
GeneralizedForm gf_derivative_n(GeneralizedForm g, int n);

/// Multiply by x^da (rational da).
GeneralizedForm gf_mul_xpow(GeneralizedForm g, const Rational& da);

/// Multiply by (x-1)^db (rational db).
GeneralizedForm gf_mul_x1pow(GeneralizedForm g, const Rational& db);

/// Multiply the polynomial cofactor.
GeneralizedForm gf_mul_poly(GeneralizedForm g, const Poly& p);

/**
 * Cancel all powers of x and (x-1) dividing f into the exponents, then
 * require both residual exponents to be non-negative integers and expand to a
 * plain polynomial.  Throws NotPolynomial otherwise.  The zero cofactor
 * normalizes to the zero polynomial for any exponents.
 */
Poly gf_normalize(const GeneralizedForm& g);

/**
 * Canonical form: powers of x and (x-1) dividing f are moved into the
 * exponents, so f(0) != 0 and f(1) != 0 unless f = 0.
 */
GeneralizedForm gf_reduce(GeneralizedForm g);

}  // namespace bp
