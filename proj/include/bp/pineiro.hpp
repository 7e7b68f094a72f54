#pragma once
/**
 * @file pineiro.hpp
 * @brief Jacobi-Pineiro polynomials: the Rodrigues-type differential
 *        construction, the ladder recursion with its exact constants, the
 *        conjugated generator bases v_i / u_j, the explicit coefficient
 *        formula for the first dual generator, and the rank-2 coefficient
 *        recursions.
 *
 * The central object is the monic polynomial P(m, l, k) of degree l_1 that
 * spans the lowest-degree line of the primary space.  It can be produced two
 * independent ways:
 *   - pineiro_rodrigues: repeated differentiation of a seeded power form
 *     (works for arbitrary rational m and k as long as l is an integer
 *     partition and the result has the expected degree);
 *   - pineiro_recursive: climbing the parameter ladder from (m, 0, 0) with
 *     first-order operators, dividing by the exact leading constants.
 *
 * The dual-side companion u_0(m, l, k), monic of degree l_r, has a fully
 * explicit hypergeometric-style coefficient formula (u0_explicit) and its own
 * lowering ladder.
 */

#include <vector>

#include "bp/generalized_form.hpp"
#include "bp/linalg.hpp"
#include "bp/operators.hpp"
#include "bp/params.hpp"
#include "bp/poly.hpp"

namespace bp {

/**
 * Exact constants of the two ladders at a fixed parameter point.
 *
 *   - A[i] (i = 0..r) relates the raising step in direction i:
 *       A_i(m,l,k) P(raise_i(m,l,k)) = D_i(l,k) P(m,l,k).
 *     For i >= 1 it equals e_0 - e_i; A[0] is a product formula.
 *   - Avee[i] (i = 0..r) relates the lowering step in direction i:
 *       Avee_i(m,l,k) u_0(lower_i(m,l,k)) = Dvee_i(l,k) u_0(m,l,k).
 *     For i <= r-1 it equals e_0^vee - e_{r-i}^vee; Avee[r] is a product
 *     formula.
 *   - Aab[a][b] = e_a - e_b (antisymmetric); these differences drive the
 *     three-term relations on both sides, since e_b - e_a equals
 *     e_{r-a}^vee - e_{r-b}^vee.
 *
 * Throws PoleInConstant when a denominator of one of the product formulas
 * vanishes.
 */
struct RecursionConstants {
  std::vector<Rational> A;     ///< raising constants A_0..A_r
  std::vector<Rational> Avee;  ///< lowering constants Avee_0..Avee_r
  Matrix Aab;                  ///< Aab[a][b] = e_a - e_b, size (r+1)x(r+1)
};

/// All ladder constants at once; see RecursionConstants.
RecursionConstants recursion_constants(const Params& pr);

/// Single raising constant A_i(pr); throws PoleInConstant (i = 0 only).
Rational raising_constant(const Params& pr, int i);

/// Single lowering constant Avee_i(pr); throws PoleInConstant (i = r only).
Rational lowering_constant(const Params& pr, int i);

/**
 * Monic degree-l_1 polynomial by the Rodrigues-type construction: starting
 * from x^{l_1-l_2-m_1-1} (x-1)^{l_1-k-1}, alternately differentiate
 * l_j - l_{j+1} times and multiply by x^{l_{j+1}-l_{j+2}-m_{j+1}-1}, then
 * clear the accumulated exponents with x^{m_1+..+m_r+r} (x-1)^{k+1}.
 *
 * l must be a non-increasing sequence of non-negative integers of the same
 * length as m; m and k may be arbitrary rationals.  Throws NotAdmissible when
 * the construction does not produce a polynomial of degree exactly l_1.
 */
Poly pineiro_rodrigues(const std::vector<Rational>& m, const std::vector<int>& l,
                       const Rational& k);

/// Rodrigues-type construction reading (m, l, k) from a parameter triple.
Poly pineiro_rodrigues(const Params& pr);

/**
 * Monic degree-l_1 polynomial by the raising ladder: starting from the
 * constant 1 at (m, 0, 0), apply D_i and divide by A_i along the ladder index
 * multiset of (m, l, k).  Requires integer k >= l_1 (m may be rational).
 * Throws ZeroRecursionConstant when a step constant vanishes, and
 * PoleInConstant when a constant itself is undefined.
 */
Poly pineiro_recursive(const Params& pr);

/**
 * Conjugated generators v_0..v_r of the primary space: v_i is monic with
 * nonzero constant term, and v_i x^{S_i} is the degree-e_i element of the
 * balanced basis (order exactly S_i at 0).  Built by the raising ladder on
 * each generator with the conjugated first-order operators; supports rational
 * m (integer k >= l_1 still required).  Throws NotAdmissible when a ladder
 * step kills a generator or the final degree/constant-term checks fail.
 */
std::vector<Poly> v_basis(const Params& pr);

/**
 * Conjugated generators u_0..u_r of the dual space: u_j is the balanced basis
 * element of degree e_j^vee divided by x^{S_j^vee}.  Integer consistent
 * parameters only; throws Inconsistent otherwise.
 */
std::vector<Poly> u_basis(const Params& pr);

/**
 * First dual generator u_0(m, l, k), monic of degree l_r, by the explicit
 * coefficient formula
 *
 *   u_0 = sum_{i=0}^{l_r} (-1)^i c_i x^{l_r - i},
 *   c_i = binom(l_r, i) prod_{j=0}^{i-1} prod_{s=1}^{r} N(s,j) / D(s,j),
 *
 * with N(s,j) = m_{r-s+1}+..+m_r - l_r + s + j and
 * D(s,j) = N(s,j) + 1 + l_{r-s} - l_{r-s+1}  (l_0 = k, l_{r+1} = 0).
 *
 * m and k may be rational; l must be a non-increasing sequence of
 * non-negative integers.  Throws PoleInCoefficient when some D(s,j)
 * vanishes.
 */
Poly u0_explicit(const std::vector<Rational>& m, const std::vector<int>& l,
                 const Rational& k);

/// Explicit first dual generator reading (m, l, k) from a parameter triple.
Poly u0_explicit(const Params& pr);

/**
 * Residual of the cyclic three-term relation among the shifted polynomials in
 * directions i < j < s (all in 0..r).  For the primary side:
 *
 *   Aab[j][s] A_i P(raise_i) + Aab[s][i] A_j P(raise_j)
 *                            + Aab[i][j] A_s P(raise_s),
 *
 * and for the dual side the same pattern with Avee and lowering shifts of
 * u_0.  Identically zero wherever all terms are defined; returned as a
 * polynomial so tests can assert exact vanishing.  Rational m and k are
 * supported through the Rodrigues/explicit routes.
 */
Poly three_term_residual(const Params& pr, int i, int j, int s, SpaceKind kind);

/**
 * Coefficient chains of the two rank-2 generators:
 *   a[n] are the coefficients of P(m, l, k) in powers of (x - 1),
 *   b[n] are the coefficients of u_0(m, l, k) in powers of x,
 * so P = sum a_n (x-1)^n (a[l_1] = 1) and u_0 = sum b_n x^n (b[l_2] = 1).
 */
struct CoeffChainR2 {
  std::vector<Rational> a;  ///< size l_1 + 1, coefficients in (x-1)^n
  std::vector<Rational> b;  ///< size l_2 + 1, coefficients in x^n
};

/**
 * One raising step of the rank-2 coefficient recursions in direction idx
 * (0, 1, or 2), from the triple src to raise_idx(src); a and b are replaced
 * by the shifted chains.  The a-step divides by A_idx(src); the b-step
 * multiplies by Avee_idx at the target and divides by n - e^vee at the
 * target, pinning the newly created top coefficient to 1 when idx = 2.
 * Throws ZeroRecursionConstant / PoleInConstant as the constants do.
 */
void coeff_recursion_step_r2(const Params& src, int idx, std::vector<Rational>& a,
                             std::vector<Rational>& b);

/**
 * Full rank-2 coefficient chains at (m, l, k), built by iterating
 * coeff_recursion_step_r2 from (m, (0,0), 0) along the ladder index multiset.
 * Requires rank 2 (UnsupportedRank otherwise) and integer k >= l_1.
 */
CoeffChainR2 coeff_recursion_r2(const Params& pr);

/**
 * One commuting Rodrigues factor applied to a generalized form:
 *   g  |->  x^S d^n [ x^{n-S} g ].
 * The factors for different parameter triples commute as operators; n must
 * be a non-negative integer.
 */
GeneralizedForm rodrigues_factor_apply(const Rational& S, int n,
                                       const GeneralizedForm& g);

/**
 * The i-th Rodrigues factor of (m, l, k), i = 0..r: S = S_i (= m_1+..+m_i+i)
 * and n = l_i - l_{i+1} with l_0 = k, l_{r+1} = 0.  For i = 0 this requires
 * k - l_1 to be a non-negative integer.
 */
GeneralizedForm rodrigues_factor_apply(const Params& pr, int i,
                                       const GeneralizedForm& g);

}  // namespace bp
