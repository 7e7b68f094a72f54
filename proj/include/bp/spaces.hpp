#pragma once
/**
 * @file spaces.hpp
 * @brief Construction of the primary and dual polynomial spaces by ladder
 *        recursion, divided Wronskians, the duality pairing, and related
 *        structural elements.
 *
 * A PolySpace stores the canonical "balanced" basis: element i is the unique
 * monic member of the space whose degree is the i-th smallest attainable
 * degree and whose vanishing order at 0 is the i-th smallest attainable
 * order.  For a consistent primary space these are (degree, order) =
 * (e_i, S_i); for the dual space (e_i^vee, S_i^vee).  This normal form
 * depends only on the span, so equality of spaces is equality of bases.
 */

#include <vector>

#include "bp/operators.hpp"
#include "bp/params.hpp"
#include "bp/poly.hpp"

namespace bp {

/// A finite-dimensional polynomial space with its canonical balanced basis.
struct PolySpace {
  SpaceKind kind;
  Params params;
  std::vector<Poly> basis;  ///< balanced: degrees and orders at 0 both ascending

  bool operator==(const PolySpace& o) const = default;
};

/**
 * Canonical balanced basis of the span of an arbitrary family: element i is
 * the unique monic element of maximal vanishing order at 0 within the span of
 * the i+1 smallest-degree echelon generators.  Depends only on the span.
 */
std::vector<Poly> balanced_basis(const std::vector<Poly>& family);

/// Sorted distinct vanishing orders attainable at `point` by the span.
std::vector<int> attainable_orders(const std::vector<Poly>& family, const Rational& point);

/**
 * The ladder base space at l = 0, k = 0: the monomial span {x^{S_i(m)}}.
 * Requires the partial sums of m to be non-negative integers.  An empty m is
 * accepted as the rank-0 edge case with basis {1}.
 */
PolySpace base_space_V0(const std::vector<Rational>& m);

/**
 * The primary space: the ladder composition over the canonical index multiset
 * applied to the base space, re-normalized to the balanced basis.  Degrees
 * and root orders are verified against the exponent data; a mismatch raises
 * InternalExponentMismatch (it would signal an implementation bug).
 */
PolySpace build_V(const Params& pr);

/**
 * The dual space: monic divided Wronskians of the r-element subsets of the
 * primary basis; omitting element i yields dual basis element r - i.  Flag
 * data is verified as in build_V.
 */
PolySpace build_U(const Params& pr);

/**
 * Wronskian of the listed functions divided exactly by the prescribed weight
 * product: for n functions the divisor is T_1^{n-1} T_2^{n-2} ... T_{n-1}.
 * Throws NonExactDivision when any division leaves a remainder.
 */
Poly divided_wronskian_raw(const std::vector<Poly>& fs,
                           const std::vector<GeneralizedForm>& weights);

/**
 * Divided Wronskian of the selected basis elements of a space, using the
 * space's own weight tuple (reversed for the dual kind).  Indices must be
 * strictly ascending members of 0..r.
 */
Poly divided_wronskian(const PolySpace& space, const std::vector<int>& indices);

/**
 * The duality pairing <f, g> with f in the primary span and g in the dual
 * span: decomposes g over the omit-one divided Wronskians of the primary
 * basis and evaluates one further divided Wronskian per term.  Throws
 * NotInSpace when either argument lies outside its span.
 */
Rational pairing(const Poly& f, const Poly& g, const Params& pr);

/// Pairing against a pre-built primary space (avoids rebuilding in sweeps).
Rational pairing_with_space(const Poly& f, const Poly& g, const PolySpace& V);

/**
 * The projection x^{-n_1} d/dx o ... o x^{-n_s} d/dx applied to g (rightmost
 * factor first), where (n_1..n_s) = mbar_tail; realizes the surjection from a
 * padded-parameter dual space onto the original one.  Throws NotPolynomial
 * when the image fails to normalize.
 */
Poly u_inclusion_project(const Poly& g, const std::vector<Rational>& mbar_tail);

/**
 * The i-th structured basis element (1 <= i <= r) of a primary space: the
 * unique monic element of the form
 *   (x-1)^{k+1} x^{S_{i-1}} (dense polynomial of degree m_i - l_i + l_{i+1}),
 * found as a combination of balanced elements i-1 and i.  Together with the
 * first balanced element these form an alternative basis of the space.
 */
Poly structured_basis_element(const PolySpace& V, int i);

}  // namespace bp
