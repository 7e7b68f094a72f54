#pragma once
/**
 * @file operators.hpp
 * @brief First-order ladder operators between neighboring polynomial spaces,
 *        their compositions, and the closed-form scalar ODE operators of
 *        orders two (rank 1) and three (rank 2).
 *
 * The two ladder families are
 *   D_i      = x(x-1) d/dx - e_i(x-1) - (k+1)   (raises l_1..l_i and k by one),
 *   D_i^vee  = x d/dx - e^vee_{r-i}             (lowers l_1..l_i and k by one),
 * where e_i and e^vee_j are the degree sequences of the primary and dual
 * spaces attached to the *source* parameters.
 */

#include <vector>

#include "bp/generalized_form.hpp"
#include "bp/params.hpp"
#include "bp/poly.hpp"

namespace bp {

/// Which of the two polynomial-space families an object belongs to.
enum class SpaceKind { V, U };

/// The operator p(x) d/dx + q(x) with polynomial coefficients.
struct FirstOrderOp {
  Poly p;
  Poly q;

  /// Exact application to a polynomial: p f' + q f.
  Poly apply(const Poly& f) const;
  /// Exact application to a generalized form x^a (x-1)^b f.
  GeneralizedForm apply(const GeneralizedForm& g) const;

  bool operator==(const FirstOrderOp& o) const = default;
};

/// The raising operator D_i at the given parameters; 0 <= i <= r.
FirstOrderOp op_D(const Params& pr, int i);

/// The lowering operator D_i^vee at the given parameters; 0 <= i <= r.
FirstOrderOp op_Dvee(const Params& pr, int i);

/**
 * One conjugated raising step: computes x^{-S} D_i(pr) (x^S f) for a
 * polynomial f, i.e. x(x-1) f' + (S - e_i(pr)) (x-1) f - (k+1) f.
 * The result is again a polynomial for any rational S.
 */
Poly conjugated_ladder_apply(const Params& pr, int i, const Rational& S, const Poly& f);

/// The composition a(b(.)) of two first-order operators, expanded.
struct SecondOrderOp {
  Poly c2;  ///< coefficient of d^2/dx^2
  Poly c1;  ///< coefficient of d/dx
  Poly c0;  ///< multiplication part

  Poly apply(const Poly& f) const;
  bool operator==(const SecondOrderOp& o) const = default;
};

SecondOrderOp compose(const FirstOrderOp& a, const FirstOrderOp& b);

/**
 * Scalar ODE operator of order r+1 with rational-function coefficients,
 * each stored as a generalized form x^a (x-1)^b f with integer a, b >= -1,
 * so that x(x-1) times any coefficient is a polynomial.
 */
struct OdeOperator {
  std::vector<GeneralizedForm> coeff;  ///< coeff[j] multiplies d^j/dx^j

  int order() const { return static_cast<int>(coeff.size()) - 1; }

  /**
   * Exact application with cleared denominators: returns x(x-1) (D f).
   * The result is the zero polynomial iff f lies in the kernel of D.
   */
  Poly apply_cleared(const Poly& f) const;
};

/**
 * The closed-form annihilating operator of the primary (V) or dual (U) space
 * at the given parameters.  Available for r = 1 (order two; the two families
 * coincide because the rank-one spaces are self-dual) and r = 2 (order
 * three).  Throws UnsupportedRank otherwise.
 */
OdeOperator ode_operator(const Params& pr, SpaceKind kind);

}  // namespace bp
