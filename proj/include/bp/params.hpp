#pragma once
/**
 * @file params.hpp
 * @brief Parameter triples (m, l, k), their consistency region, and the exact
 *        exponent data (degrees and root orders) of the associated polynomial
 *        spaces, together with the weight tuples and ladder index multisets.
 *
 * Conventions used throughout the library:
 *   - indices on m and l are 1-based (m_1..m_r, l_1..l_r) with the boundary
 *     values l_0 = k and l_{r+1} = 0;
 *   - l is always a sequence of integers (degrees are integers), while m and k
 *     may be arbitrary rationals wherever a formula permits;
 *   - the shift vector "1_i" adds one to each of the first i components of l
 *     (for i = 0 it is the zero vector), matching the ladder operators, which
 *     simultaneously raise k by one.
 */

#include <vector>

#include "bp/generalized_form.hpp"
#include "bp/rational.hpp"

namespace bp {

/// Parameter triple (m, l, k) of rank r.
struct Params {
  int r = 1;                ///< rank; number of entries in m and l
  std::vector<Rational> m;  ///< m_1..m_r (index 0 holds m_1)
  std::vector<int> l;       ///< l_1..l_r (index 0 holds l_1)
  Rational k;

  /// Validated constructor; throws InvalidInput on size mismatches.
  static Params make(std::vector<Rational> m, std::vector<int> l, Rational k);

  /// m_i for 1 <= i <= r.
  const Rational& m_at(int i) const;
  /// l_i as a rational, honoring l_0 = k and l_{r+1} = 0; 0 <= i <= r+1.
  Rational l_at(int i) const;
  /// l_i as an integer for 1 <= i <= r+1 (l_{r+1} = 0).
  int l_int(int i) const;

  /// k as an integer; throws InvalidInput when k is not an integer.
  long k_int() const;

  /// Sum m_1 + ... + m_i (empty for i = 0).
  Rational m_prefix(int i) const;
  /// Sum m_{r+1-i} + ... + m_r (empty for i = 0).
  Rational m_suffix(int i) const;
  /// The scalar weight total: m_1 + ... + m_r + r - 1.
  Rational m_total() const;

  /// Apply the ladder shift: adds 1 to l_1..l_i and to k (i = 0 shifts only k).
  Params raised(int i) const;
  /// Inverse ladder shift: subtracts 1 from l_1..l_i and from k.
  Params lowered(int i) const;

  bool operator==(const Params& o) const = default;
};

/**
 * Consistency test: every m_i, every l_i, and k are non-negative integers with
 * k >= l_1 >= ... >= l_r >= 0 and l_s - l_{s+1} <= m_s for s = 1..r.
 */
bool is_consistent(const Params& p);

/// Throws Inconsistent when is_consistent fails.
void require_consistent(const Params& p);

/// Degree e_i of the primary space, i = 0..r:  k + m_1+..+m_i - l_i + l_{i+1} + i.
Rational e_V(const Params& p, int i);

/// Degree e_i^vee of the dual space, i = 0..r:  m_{r+1-i}+..+m_r - l_{r-i+1} + l_{r-i} + i.
Rational e_U(const Params& p, int i);

/// Root order S_i at 0 for the primary space, i = 0..r:  m_1+..+m_i + i.
Rational S_V(const Params& p, int i);

/// Root order S_i^vee at 0 for the dual space, i = 0..r:  m_{r+1-i}+..+m_r + i.
Rational S_U(const Params& p, int i);

/**
 * Full exponent data of both spaces: degrees and root orders at 0 and 1,
 * each listed ascending (index order i = 0..r).
 */
struct ExponentData {
  std::vector<Rational> eV;        ///< degrees of the primary space
  std::vector<Rational> eU;        ///< degrees of the dual space
  std::vector<Rational> orders0V;  ///< root orders of the primary space at 0
  std::vector<Rational> orders1V;  ///< root orders of the primary space at 1
  std::vector<Rational> orders0U;  ///< root orders of the dual space at 0
  std::vector<Rational> orders1U;  ///< root orders of the dual space at 1
};

ExponentData exponents(const Params& p);

/**
 * Weight tuple T_1..T_r:  T_1 = x^{m_1} (x-1)^k and T_i = x^{m_i} for i >= 2,
 * as generalized forms (exponents may be rational).
 */
struct WeightTuple {
  std::vector<GeneralizedForm> T;  ///< T_1..T_r (index 0 holds T_1)
};

/// Weights of the primary space.
WeightTuple weights_V(const Params& p);
/// Weights of the dual space: the reversal T_r..T_1.
WeightTuple weights_U(const Params& p);

/**
 * Ladder index multiset in ascending order: index 0 repeated k - l_1 times,
 * then index i repeated l_i - l_{i+1} times for i = 1..r.  Applying the
 * ladder operators along this sequence starting from (m, 0, 0) reaches
 * (m, l, k).  Requires integer k >= l_1; throws InvalidInput otherwise.
 */
std::vector<int> ladder_indices(const Params& p);

}  // namespace bp
