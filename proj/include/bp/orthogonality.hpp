#pragma once
/**
 * @file orthogonality.hpp
 * @brief Exact Beta-moment calculus for Jacobi-type weights on [0,1] and the
 *        verification suites built on it: vanishing inner products against
 *        the shifted monomial families, closed-form norm evaluations, and the
 *        integral adjointness of the ladder operators.
 *
 * Every integral here is reduced to exact rational arithmetic.  For a weight
 * x^a (1-x)^b the moments are Beta values B(a+n+1, b+1); ratios of such
 * values are rational whenever the exponents differ by integers, via the
 * functional equation Gamma(z+1) = z Gamma(z).  No floating point enters the
 * verification path; a high-precision quadrature routine is provided only as
 * an independent numeric bridge.
 *
 * Scalar products of the pairing family used throughout the library,
 *
 *   (f, g)_{a,c}  =  integral_0^1 f g x^{-a-1} (1-x)^{-c-1} dx,
 *
 * are reported as exact ratios against a fixed reference weight of the same
 * family, which keeps every quantity rational even when the individual
 * integrals are not.
 */

#include <map>
#include <string>
#include <vector>

#include "bp/params.hpp"
#include "bp/poly.hpp"
#include "bp/rational.hpp"

namespace bp {

/// The weight x^a (1-x)^b on the interval [0,1].
struct JacobiWeight {
  Rational a;  ///< exponent of x
  Rational b;  ///< exponent of (1-x)

  /// True when the formal moments are convergent integrals (a > -1, b > -1).
  bool integrable() const { return a > Rational(-1) && b > Rational(-1); }

  bool operator==(const JacobiWeight& o) const = default;
};

/// The weight of the pairing (. , .)_{a,c}: x^{-a-1} (1-x)^{-c-1}.
JacobiWeight pairing_weight(const Rational& a, const Rational& c);

/**
 * Normalized moment mu_n / mu_0 of the weight, where mu_n = B(a+n+1, b+1),
 * through the recurrence mu_{j+1}/mu_j = (a+j+1)/(a+b+j+2).
 * Throws MomentPole when a factor's numerator or denominator vanishes.
 */
Rational moment_ratio(const JacobiWeight& w, int n);

/**
 * Exact ratio of Beta values B(a1,b1)/B(a2,b2), reduced through the Gamma
 * functional equation.  Requires a1-a2 and b1-b2 to be integers
 * (NonIntegerShift otherwise); throws GammaPole when the functional-equation
 * ladder crosses a pole (a vanishing factor).
 */
Rational beta_ratio(const Rational& a1, const Rational& b1, const Rational& a2,
                    const Rational& b2);

/**
 * Exact normalized integral  integral_0^1 f g w dx / mu_0(ref), where mu_0 of
 * a weight is its total mass B(a+1, b+1).  w and ref must differ by integer
 * exponent shifts.  Errors as in moment_ratio / beta_ratio.
 */
Rational inner_product(const Poly& f, const Poly& g, const JacobiWeight& w,
                       const JacobiWeight& ref);

/**
 * The pairing (f, g)_{a,c} normalized by the reference mass (1,1)_{aref,cref},
 * as an exact rational: shorthand for inner_product over pairing_weight pairs.
 */
Rational pairing_ratio(const Poly& f, const Poly& g, const Rational& a,
                       const Rational& c, const Rational& aref,
                       const Rational& cref);

/**
 * Verifies the defining orthogonality of the monic degree-l_1 polynomial
 * P(m, l, k): for every window index i = 0..r-1 and every
 * t with t - i in {0, .., l_{r-i} - l_{r-i+1} - 1}, the product
 * (P, x^s)_{|m|, k} with s = m_{r-i+1}+..+m_r + t vanishes exactly (the
 * monomial x^s is absorbed into the weight exponent, so rational s is fine).
 * Returns true iff every listed product is exactly zero; propagates pole
 * errors from the moment calculus.  Vacuously true when l_1 = 0.
 */
bool check_pineiro_orthogonality(const std::vector<Rational>& m,
                                 const std::vector<int>& l, const Rational& k);

/**
 * Exact norm checks: evaluates  N = (y_1, y_r)_{|m|+1,k} / (1,1)_{|m|+1,k-l_1}
 * by moment calculus and returns named residuals against independent
 * closed-form evaluations, all of which must be exactly zero:
 *
 *   - "ladder_product" (any rank): the product of lowering/raising constant
 *     ratios Avee_i / A_i collected along the descent of the index multiset
 *     {i x (l_i - l_{i+1}), i = r..1} down to (0, k - l_1);
 *   - "general_display" (any rank): the fully expanded closed form
 *       (-1)^{l_r} l_r! x
 *       prod_{i=0}^{r-1} prod_{j=0}^{l_r-1}
 *         [ms(i+1)+i-j] / [ms(i+1)+i-j+1+l_{r-i-1}-l_{r-i}] x
 *       prod_{i=1}^{r-1} prod_{s=0}^{l_i-l_{i+1}-1}
 *         [ms(r-i)+r+1-i+s] / [mp(i)+i-s+k-l_1] x
 *       prod_{s=0}^{l_r-1} 1 / [mp(r)+r-s+k-l_1],
 *     with ms/mp the suffix/prefix sums of m and l_0 = k;
 *   - "r1_closed" (rank 1): (-1)^l l! prod_{i=1}^{l} (m+1-i)/(k+m+2-l-i)^2;
 *   - "r2_closed" (rank 2): (-1)^{l_2} l_2! x
 *       prod_{i=0}^{l_2-1} (m_2-i)(m_1+m_2+1-i) /
 *         [(m_2+l_1-l_2+1-i)(k+m_1+m_2+2-l_1-i)^2] x
 *       prod_{i=0}^{l_1-l_2-1} (m_2+2+i)/(k+m_1+1-l_1-i).
 *
 * Propagates pole errors; intended for the admissible rational region
 * (negative non-integer parameters), where every factor is pole-free.
 */
std::map<std::string, Rational> check_norm_formulas(const std::vector<Rational>& m,
                                                    const std::vector<int>& l,
                                                    const Rational& k);

/**
 * Integral adjointness of the ladder pair in direction i (0 <= i <= r):
 *
 *   (D_i(m,l,k) f, g)_{|m|+1,k+1}  =  (f, Dvee_i(m,l+1_i,k+1) g)_{|m|+1,k}
 *
 * for f, g ranging over the monomial test basis up to degree 6, all
 * evaluated exactly against the common reference (1,1)_{|m|+1,k}.  Returns
 * true iff every pair satisfies the identity exactly.
 */
bool check_integral_adjointness(const std::vector<Rational>& m,
                                const std::vector<int>& l, const Rational& k,
                                int i);

/**
 * Independent numeric bridge: mu_n / mu_0 of an integrable weight by
 * tanh-sinh quadrature in double precision (absolute node count fixed, no
 * adaptivity needed thanks to the double-exponential decay).  Intended for
 * cross-checking moment_ratio to ~1e-12 relative accuracy; requires
 * w.integrable().
 */
double moment_ratio_numeric(const JacobiWeight& w, int n);

/**
 * The unique monic polynomial of degree l_1 satisfying the window
 * orthogonality of check_pineiro_orthogonality, obtained by solving the
 * moment linear system (no Rodrigues construction involved).  Throws
 * InvalidInput when the system is singular at the given parameters.
 */
Poly orthogonality_characterized(const std::vector<Rational>& m,
                                 const std::vector<int>& l, const Rational& k);

}  // namespace bp
