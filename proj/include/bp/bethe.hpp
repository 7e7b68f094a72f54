#pragma once
/**
 * @file bethe.hpp
 * @brief Bethe tuples and the two-point Bethe ansatz system: tuple extraction
 *        from the primary space, exact genericity testing, equation residuals,
 *        root-based solving, the scalar weight function of the Bethe vector,
 *        and the no-solution condition with its integer scanner.
 *
 * The ansatz system lives on coordinates grouped into r levels of sizes
 * l_1 >= ... >= l_r.  Level j couples to its neighbours j-1 and j+1; level 1
 * additionally sees the two marked points 0 and 1 through the terms m_1/t and
 * k/(t-1), while every level j carries its own m_j/t term and the repulsion
 * -2/(t - t') within the level.  A coordinate vector solves the system
 * exactly when the monic level polynomials y_j = prod (x - t^(j)_s) form a
 * "generic" tuple: each y_j square-free, coprime to its neighbours, and
 * non-vanishing at the marked points carried by its weight factor.
 */

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "bp/generalized_form.hpp"
#include "bp/params.hpp"
#include "bp/poly.hpp"
#include "bp/rational.hpp"

namespace bp {

/// The level polynomials (y_1, ..., y_r), each monic with deg y_i = l_i.
struct YTuple {
  std::vector<Poly> ys;

  bool operator==(const YTuple&) const = default;
};

/**
 * A candidate coordinate vector grouped by level.  Exactly one representation
 * is populated: exact rational coordinates (the default for points assembled
 * from isolated real roots) or floating-point complex coordinates.
 */
struct BethePoint {
  std::vector<std::vector<Rational>> exact;
  std::vector<std::vector<std::complex<double>>> numeric;

  static BethePoint from_exact(std::vector<std::vector<Rational>> groups);
  static BethePoint from_numeric(std::vector<std::vector<std::complex<double>>> groups);

  /// True when the rational representation is the active one.
  bool is_exact() const { return numeric.empty(); }
  /// Coordinates per level for the active representation.
  std::vector<int> level_sizes() const;
};

/**
 * Itemized genericity verdict for a tuple.  `generic` is the conjunction of
 * every listed check; `witness` describes the first failure in terms of the
 * offending polynomial data (empty when generic).
 */
struct GenericityReport {
  std::vector<bool> squarefree;        ///< per level: y_i has no multiple root
  std::vector<bool> neighbor_coprime;  ///< per adjacent pair: gcd(y_i, y_{i+1}) = 1
  std::vector<bool> weight_coprime;    ///< per level: y_i(0) != 0, and y_1(1) != 0
  bool generic = true;
  std::string witness;
};

/// Outcome discriminator for solve_bae.
enum class BaeOutcome {
  Solution,              ///< real solution point assembled and returned
  NoSolution,            ///< tuple fails genericity: the system has no solutions
  ComplexRootsDetected,  ///< a square-free level polynomial has non-real roots
};

/// Full solve result; `point`/`residual` are meaningful for Solution,
/// `witness` for NoSolution, and `tuple` is always the examined tuple.
struct BaeResult {
  BaeOutcome outcome = BaeOutcome::NoSolution;
  BethePoint point;
  double residual = 0.0;
  GenericityReport witness;
  YTuple tuple;
};

/**
 * The tuple attached to consistent parameters: y_i is the monic divided
 * Wronskian of the first i balanced basis elements of the primary space.
 * Degrees are verified to equal l_i.  Throws Inconsistent.
 */
YTuple y_tuple(const Params& pr);

/**
 * The same prefix construction over an explicit spanning family with explicit
 * weight factors T_1, T_2, ... (for spaces that are not reachable by the
 * parameter ladder).  The family is first renormalized to its balanced basis;
 * a family of n+1 functions yields n tuple entries and needs at least n-1
 * weights.  Throws NonExactDivision when a divided Wronskian fails to clear
 * its weight divisor.
 */
YTuple y_tuple_from_basis(const std::vector<Poly>& family,
                          const std::vector<GeneralizedForm>& weights);

/**
 * Exact genericity test: square-freeness per level, coprimality of adjacent
 * levels, and non-vanishing at the marked points (0 for every level, also 1
 * for level 1) dictated by the weight factors x^{m_1}(x-1)^k, x^{m_2}, ...
 */
GenericityReport is_generic(const YTuple& yt, const Params& pr);

/**
 * Maximum absolute residual of the ansatz equations at a point.  Rational
 * points are evaluated exactly (a true solution reports exactly 0); numeric
 * points in double-precision complex arithmetic.  Group sizes must match l.
 * Throws CoincidingCoordinates when two coordinates within a level or across
 * adjacent levels collide, CoordinateAtSingularPoint when a coordinate sits
 * at 0 (any level) or at 1 (level 1).
 */
double bae_residual(const BethePoint& t, const Params& pr);

/// Exact-path residual for rational points, as a Rational (max |LHS|).
Rational bae_residual_rational(const BethePoint& t, const Params& pr);

/**
 * Decide the system for consistent parameters.  Builds the tuple, tests
 * genericity (failure is a NoSolution *result*, never an exception), then
 * isolates each level's real roots to `precision` and returns the assembled
 * point with its residual.  A square-free level polynomial with fewer real
 * roots than its degree yields ComplexRootsDetected.  Throws Inconsistent.
 */
BaeResult solve_bae(const Params& pr,
                    const Rational& precision = Rational(1, 1000000000000L));

/**
 * The scalar weight function of the Bethe vector: the symmetrized product of
 * reciprocal chain factors
 *   1/[(t^(1)_* - 1)(t^(2)_* - t^(1)_*) ... (t^(c)_* - t^(c-1)_*)]
 * summed over independent permutations of each level's coordinates and
 * divided by prod_j (l_j - l_{j+1})!.  Exact over rational points; the point
 * must use the exact representation and match the partition l, and each
 * l_i <= 6 (factorial symmetrization guard).  Throws CoincidingCoordinates /
 * CoordinateAtSingularPoint when a chain denominator vanishes.
 */
Rational nu_weight(const BethePoint& t, const std::vector<int>& l);

/**
 * The no-solution locus for the l = (2,1) family: the exact value of
 * (2 m_1 + m_2)^2 + k (4 m_1 - m_2^2).  Zero forces y_1 = y_2^2, a
 * non-generic tuple.
 */
Rational counterexample_condition(const Rational& m1, const Rational& m2,
                                  const Rational& k);

/**
 * All integer triples (m_1, m_2, k) within the bounds (each >= 1) whose
 * parameters (m, (2,1), k) are consistent, satisfy the no-solution condition,
 * and pass the exact verification y_1 = y_2^2.  Sorted lexicographically;
 * the grid is swept in parallel (BP_JOBS-aware).
 */
std::vector<std::array<long, 3>> scan_counterexamples(long m1_max, long m2_max,
                                                      long k_max);

}  // namespace bp
