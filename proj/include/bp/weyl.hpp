#pragma once
/**
 * @file weyl.hpp
 * @brief Symmetric-group elements acting on the parameters (m, l, k) by the
 *        shifted (dot) action, through the explicit coordinate formulas of
 *        the simple transpositions.
 *
 * The group is S_{r+1} acting on positions 0..r; the simple transposition
 * s_i (1 <= i <= r) swaps positions i-1 and i.  On parameters:
 *   s_i . m: m_{i-1} += m_i + 1,  m_{i+1} += m_i + 1,  m_i -> -m_i - 2;
 *   (s_i)_k l: l_i -> l_{i-1} + l_{i+1} - l_i  (with l_0 = k, l_{r+1} = 0).
 * k itself is preserved by the l-action.  General elements act through any
 * word in the generators; the action is word-independent.
 */

#include <utility>
#include <vector>

#include "bp/params.hpp"

namespace bp {

/// An element of the symmetric group on {0, 1, ..., r}.
struct WeylElement {
  std::vector<int> images;  ///< images[p] = w(p)

  static WeylElement identity(int r);
  /// The simple transposition s_i, swapping positions i-1 and i; 1 <= i <= r.
  static WeylElement simple(int r, int i);
  /// Validated constructor from an image list (must be a permutation of 0..r).
  static WeylElement from_images(std::vector<int> images);

  int rank() const { return static_cast<int>(images.size()) - 1; }
  int apply(int p) const;
  WeylElement inverse() const;
  /// Composition: (a * b)(p) = a(b(p)).
  WeylElement operator*(const WeylElement& o) const;
  bool is_identity() const;
  bool operator==(const WeylElement& o) const = default;

  /**
   * A word (i_1, ..., i_q) in simple transpositions with
   * w = s_{i_q} o ... o s_{i_1}; acting by w applies s_{i_1} first.
   */
  std::vector<int> word() const;
};

/// All (r+1)! elements of the group, identity first.
std::vector<WeylElement> weyl_group(int r);

/**
 * The shifted action of w on the m-coordinates.
 *
 * Generators act by s_i . m = (..., m_{i-1}+m_i+1, -m_i-2, m_{i+1}+m_i+1, ...).
 * Words compose contravariantly (act(w then v) = act(v) o act(w)), the
 * convention under which the conjugated generators satisfy
 * v_i(act(w)(m, l, k)) = v_{w(i)}(m, l, k).
 */
std::vector<Rational> weyl_act_m(const WeylElement& w, const std::vector<Rational>& m);

/**
 * The shifted action (w)_k on the l-coordinates at level k; k is preserved.
 * Generators act by (s_i)_k l = (..., l_{i-1}+l_{i+1}-l_i, ...) with l_0 = k
 * and l_{r+1} = 0; on the difference vector d = (k-l_1, l_1-l_2, ..., l_r)
 * the composite action is the substitution d'_p = d_{w(p)}.  Throws
 * InvalidInput when a transformed entry is not an integer (possible only for
 * non-integer k).
 */
std::vector<int> weyl_act_l(const WeylElement& w, const std::vector<int>& l, const Rational& k);

/// Both actions at once: (m, l, k) -> (w.m, (w)_k l, k).
Params weyl_act(const WeylElement& w, const Params& p);

}  // namespace bp
