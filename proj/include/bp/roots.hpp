#pragma once
/**
 * @file roots.hpp
 * @brief Exact real-root machinery: square-free decomposition, Sturm counts,
 *        and certified isolation/refinement of real roots by bisection.
 */

#include <utility>
#include <vector>

#include "bp/poly.hpp"
#include "bp/rational.hpp"

namespace bp {

/// One real root: a rational approximation plus its multiplicity.
struct RootApprox {
  Rational value;    ///< within the requested precision of the true root
  int multiplicity;  ///< multiplicity in the original polynomial
  bool exact;        ///< true when `value` is the root itself
};

/**
 * Square-free decomposition of a nonzero polynomial: f = c * prod_i g_i^i
 * with each g_i monic, square-free, and pairwise coprime.  Returns the pairs
 * (g_i, i) with deg g_i >= 1, ascending in i.
 */
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Monic square-free part f / gcd(f, f') of a nonzero polynomial.
Poly squarefree_part(const Poly& f);

/// Number of distinct real roots of a nonzero polynomial.
int count_real_roots(const Poly& f);

/**
 * Number of distinct real roots in the open interval (lo, hi).  Neither
 * endpoint may itself be a root (InvalidInput otherwise); under that
 * precondition open and closed counts agree.
 */
int count_real_roots_in(const Poly& f, const Rational& lo, const Rational& hi);

/// Strict bound B with every complex root of f satisfying |z| < B.
Rational cauchy_root_bound(const Poly& f);

/**
 * All real roots of a nonzero polynomial, sorted ascending, each reported
 * with its multiplicity and approximated to within `precision` (roots hit
 * exactly during isolation are flagged and returned exactly).
 */
std::vector<RootApprox> real_roots(const Poly& f,
                                   const Rational& precision = Rational(1, 1000000000000L));

}  // namespace bp
