/**
 * @file pineiro.cpp
 * @brief Jacobi-Pineiro polynomials and their exact ladder machinery.
 */

#include "bp/pineiro.hpp"

#include <string>
#include <utility>

#include "bp/errors.hpp"
#include "bp/spaces.hpp"

namespace bp {

namespace {

/// Validates that l is a non-increasing sequence of non-negative integers
/// matching m in length.
void require_partition(const std::vector<Rational>& m, const std::vector<int>& l) {
  if (m.size() != l.size()) {
    raise(ErrorCode::InvalidInput, "m and l must have the same length");
  }
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 0) raise(ErrorCode::InvalidInput, "l must be non-negative");
    if (i + 1 < l.size() && l[i] < l[i + 1]) {
      raise(ErrorCode::InvalidInput, "l must be non-increasing");
    }
  }
}

/// N(s, j) of the dual product formulas: m_{r-s+1}+..+m_r - l_r + s + j.
Rational dual_num(const Params& pr, int s, int j) {
  return pr.m_suffix(s) - pr.l_at(pr.r) + s + j;
}

/// D(s, j) = N(s, j) + 1 + l_{r-s} - l_{r-s+1}.
Rational dual_den(const Params& pr, int s, int j) {
  return dual_num(pr, s, j) + 1 + pr.l_at(pr.r - s) - pr.l_at(pr.r - s + 1);
}

}  // namespace

Rational raising_constant(const Params& pr, int i) {
  if (i < 0 || i > pr.r) raise(ErrorCode::IndexOutOfRange, "raising index");
  if (i >= 1) return e_V(pr, 0) - e_V(pr, i);
  // A_0 is minus the product over s = 0..r of num_s / den_s with
  // num_s = k + m_1+..+m_s - l_1 + s + 1 and den_s = num_s - l_s + l_{s+1}.
  Rational prod(1);
  for (int s = 0; s <= pr.r; ++s) {
    const Rational num = pr.k + pr.m_prefix(s) - pr.l_at(1) + s + 1;
    const Rational den = num - pr.l_at(s) + pr.l_at(s + 1);
    if (den == 0) {
      raise(ErrorCode::PoleInConstant,
            "raising constant A_0: denominator vanishes at factor " +
                std::to_string(s));
    }
    prod *= num / den;
  }
  return -prod;
}

Rational lowering_constant(const Params& pr, int i) {
  if (i < 0 || i > pr.r) raise(ErrorCode::IndexOutOfRange, "lowering index");
  if (i <= pr.r - 1) return e_U(pr, 0) - e_U(pr, pr.r - i);
  Rational prod(1);
  for (int s = 0; s <= pr.r; ++s) {
    const Rational num = dual_num(pr, s, 0);
    const Rational den = dual_den(pr, s, 0);
    if (den == 0) {
      raise(ErrorCode::PoleInConstant,
            "lowering constant: denominator vanishes at factor " +
                std::to_string(s));
    }
    prod *= num / den;
  }
  return -prod;
}

RecursionConstants recursion_constants(const Params& pr) {
  RecursionConstants rc;
  rc.A.reserve(pr.r + 1);
  rc.Avee.reserve(pr.r + 1);
  for (int i = 0; i <= pr.r; ++i) {
    rc.A.push_back(raising_constant(pr, i));
    rc.Avee.push_back(lowering_constant(pr, i));
  }
  rc.Aab.assign(pr.r + 1, std::vector<Rational>(pr.r + 1, Rational(0)));
  for (int a = 0; a <= pr.r; ++a) {
    for (int b = 0; b <= pr.r; ++b) {
      rc.Aab[a][b] = e_V(pr, a) - e_V(pr, b);
    }
  }
  return rc;
}

Poly pineiro_rodrigues(const std::vector<Rational>& m, const std::vector<int>& l,
                       const Rational& k) {
  require_partition(m, l);
  const int r = static_cast<int>(m.size());
  if (r == 0) return Poly::one();
  auto l_of = [&](int i) -> Rational {
    if (i <= 0) return k;
    if (i > r) return Rational(0);
    return Rational(l[i - 1]);
  };
  // Seed x^{l_1 - l_2 - m_1 - 1} (x-1)^{l_1 - k - 1}.
  GeneralizedForm cur{l_of(1) - l_of(2) - m[0] - 1, l_of(1) - k - 1, Poly::one()};
  Rational msum(0);
  for (int j = 1; j <= r; ++j) {
    msum += m[j - 1];
    cur = gf_derivative_n(cur, l[j - 1] - (j < r ? l[j] : 0));
    if (j < r) {
      cur = gf_mul_xpow(cur, l_of(j + 1) - l_of(j + 2) - m[j] - 1);
    }
  }
  cur = gf_mul_xpow(cur, msum + r);
  cur = gf_mul_x1pow(cur, k + 1);
  const Poly p = gf_normalize(cur);
  if (p.degree() != l[0]) {
    raise(ErrorCode::NotAdmissible,
          "construction degree " + std::to_string(p.degree()) +
              " differs from l_1 = " + std::to_string(l[0]));
  }
  return p.monic();
}

Poly pineiro_rodrigues(const Params& pr) {
  return pineiro_rodrigues(pr.m, pr.l, pr.k);
}

Poly pineiro_recursive(const Params& pr) {
  require_partition(pr.m, pr.l);
  const std::vector<int> steps = ladder_indices(pr);
  Params cur = Params::make(pr.m, std::vector<int>(pr.r, 0), Rational(0));
  Poly p = Poly::one();
  for (int idx : steps) {
    const Rational a = raising_constant(cur, idx);
    if (a == 0) {
      raise(ErrorCode::ZeroRecursionConstant,
            "raising constant vanishes at direction " + std::to_string(idx));
    }
    p = op_D(cur, idx).apply(p) * (Rational(1) / a);
    cur = cur.raised(idx);
  }
  if (!(cur == pr)) {
    raise(ErrorCode::InvalidInput, "ladder does not reach the requested triple");
  }
  return p;
}

std::vector<Poly> v_basis(const Params& pr) {
  require_partition(pr.m, pr.l);
  const std::vector<int> steps = ladder_indices(pr);
  std::vector<Poly> v(pr.r + 1, Poly::one());
  std::vector<Rational> S(pr.r + 1);
  for (int i = 0; i <= pr.r; ++i) S[i] = S_V(pr, i);
  Params cur = Params::make(pr.m, std::vector<int>(pr.r, 0), Rational(0));
  for (int idx : steps) {
    for (int i = 0; i <= pr.r; ++i) {
      v[i] = conjugated_ladder_apply(cur, idx, S[i], v[i]);
      if (v[i].is_zero()) {
        raise(ErrorCode::NotAdmissible,
              "ladder step annihilates generator " + std::to_string(i));
      }
    }
    cur = cur.raised(idx);
  }
  for (int i = 0; i <= pr.r; ++i) {
    const Rational expected = e_V(pr, i) - S[i];
    if (Rational(v[i].degree()) != expected || v[i].coeff(0) == 0) {
      raise(ErrorCode::NotAdmissible,
            "generator " + std::to_string(i) + " has wrong degree or vanishes at 0");
    }
    v[i] = v[i].monic();
  }
  return v;
}

std::vector<Poly> u_basis(const Params& pr) {
  require_consistent(pr);
  const PolySpace dual = build_U(pr);
  std::vector<Poly> u;
  u.reserve(pr.r + 1);
  for (int j = 0; j <= pr.r; ++j) {
    const Rational sj = S_U(pr, j);
    if (!sj.is_integer()) {
      raise(ErrorCode::InternalExponentMismatch, "non-integer root order");
    }
    u.push_back(Poly::exact_div(
        dual.basis[j], Poly::monomial(static_cast<int>(sj.to_long()))));
  }
  return u;
}

Poly u0_explicit(const std::vector<Rational>& m, const std::vector<int>& l,
                 const Rational& k) {
  require_partition(m, l);
  const int r = static_cast<int>(m.size());
  if (r == 0) return Poly::one();
  const Params pr{r, m, l, k};
  const int lr = l[r - 1];
  std::vector<Rational> coeffs(lr + 1, Rational(0));
  Rational c(1);
  coeffs[lr] = c;  // x^{l_r} term, i = 0
  for (int i = 1; i <= lr; ++i) {
    // c_i / c_{i-1} = (l_r - i + 1)/i * prod_s N(s, i-1)/D(s, i-1).
    c *= Rational(lr - i + 1) / Rational(i);
    for (int s = 1; s <= r; ++s) {
      const Rational den = dual_den(pr, s, i - 1);
      if (den == 0) {
        raise(ErrorCode::PoleInCoefficient,
              "coefficient denominator vanishes at factor " + std::to_string(s) +
                  ", step " + std::to_string(i));
      }
      c *= dual_num(pr, s, i - 1) / den;
    }
    coeffs[lr - i] = (i % 2 == 0) ? c : -c;
  }
  return Poly::from_coeffs(coeffs);
}

Poly u0_explicit(const Params& pr) { return u0_explicit(pr.m, pr.l, pr.k); }

Poly three_term_residual(const Params& pr, int i, int j, int s, SpaceKind kind) {
  if (i < 0 || s > pr.r) raise(ErrorCode::IndexOutOfRange, "three-term indices");
  if (!(i < j && j < s)) {
    raise(ErrorCode::InvalidInput, "three-term indices must be ascending");
  }
  const Rational Ajs = e_V(pr, j) - e_V(pr, s);
  const Rational Asi = e_V(pr, s) - e_V(pr, i);
  const Rational Aij = e_V(pr, i) - e_V(pr, j);
  Poly res;
  if (kind == SpaceKind::V) {
    res = pineiro_rodrigues(pr.raised(i)) * (Ajs * raising_constant(pr, i));
    res = res + pineiro_rodrigues(pr.raised(j)) * (Asi * raising_constant(pr, j));
    res = res + pineiro_rodrigues(pr.raised(s)) * (Aij * raising_constant(pr, s));
  } else {
    res = u0_explicit(pr.lowered(i)) * (Ajs * lowering_constant(pr, i));
    res = res + u0_explicit(pr.lowered(j)) * (Asi * lowering_constant(pr, j));
    res = res + u0_explicit(pr.lowered(s)) * (Aij * lowering_constant(pr, s));
  }
  return res;
}

void coeff_recursion_step_r2(const Params& src, int idx, std::vector<Rational>& a,
                             std::vector<Rational>& b) {
  if (src.r != 2) raise(ErrorCode::UnsupportedRank, "rank-2 recursion only");
  if (idx < 0 || idx > 2) raise(ErrorCode::IndexOutOfRange, "step direction");
  const Params dst = src.raised(idx);
  const int top_a = dst.l_int(1);
  const int top_b = dst.l_int(2);

  // a_n(dst) = [(n-k-1) a_n(src) + (n-1-e_idx(src)) a_{n-1}(src)] / A_idx(src),
  // read off from the first-order operator acting on powers of (x-1).
  const Rational A = raising_constant(src, idx);
  if (A == 0) {
    raise(ErrorCode::ZeroRecursionConstant,
          "raising constant vanishes at direction " + std::to_string(idx));
  }
  const Rational e_src = e_V(src, idx);
  std::vector<Rational> a_out(top_a + 1, Rational(0));
  auto a_at = [&](int n) -> Rational {
    return (n >= 0 && n < static_cast<int>(a.size())) ? a[n] : Rational(0);
  };
  for (int n = 0; n <= top_a; ++n) {
    a_out[n] = ((Rational(n) - src.k - 1) * a_at(n) + (n - 1 - e_src) * a_at(n - 1)) / A;
  }

  // b_n(dst) = Avee_idx(dst) / (n - e^vee_{2-idx}(dst)) * b_n(src); the newly
  // created top coefficient (idx = 2) is pinned monic.
  const Rational e_dual = e_U(dst, 2 - idx);
  std::vector<Rational> b_out(top_b + 1, Rational(0));
  auto b_at = [&](int n) -> Rational {
    return (n >= 0 && n < static_cast<int>(b.size())) ? b[n] : Rational(0);
  };
  bool need_avee = false;
  for (int n = 0; n <= top_b; ++n) {
    if (idx == 2 && n == top_b) continue;
    if (b_at(n) != 0) need_avee = true;
  }
  Rational avee(0);
  if (need_avee) avee = lowering_constant(dst, idx);
  for (int n = 0; n <= top_b; ++n) {
    if (idx == 2 && n == top_b) {
      b_out[n] = Rational(1);
      continue;
    }
    if (b_at(n) == 0) continue;
    const Rational den = Rational(n) - e_dual;
    if (den == 0) {
      raise(ErrorCode::PoleInConstant,
            "dual coefficient recursion pole at n = " + std::to_string(n));
    }
    b_out[n] = avee / den * b_at(n);
  }
  a = std::move(a_out);
  b = std::move(b_out);
}

CoeffChainR2 coeff_recursion_r2(const Params& pr) {
  if (pr.r != 2) raise(ErrorCode::UnsupportedRank, "rank-2 recursion only");
  require_partition(pr.m, pr.l);
  const std::vector<int> steps = ladder_indices(pr);
  CoeffChainR2 chain;
  chain.a = {Rational(1)};
  chain.b = {Rational(1)};
  Params cur = Params::make(pr.m, std::vector<int>(pr.r, 0), Rational(0));
  for (int idx : steps) {
    coeff_recursion_step_r2(cur, idx, chain.a, chain.b);
    cur = cur.raised(idx);
  }
  return chain;
}

GeneralizedForm rodrigues_factor_apply(const Rational& S, int n,
                                       const GeneralizedForm& g) {
  if (n < 0) raise(ErrorCode::InvalidInput, "derivative count must be >= 0");
  GeneralizedForm cur = gf_mul_xpow(g, Rational(n) - S);
  cur = gf_derivative_n(cur, n);
  return gf_mul_xpow(cur, S);
}

GeneralizedForm rodrigues_factor_apply(const Params& pr, int i,
                                       const GeneralizedForm& g) {
  if (i < 0 || i > pr.r) raise(ErrorCode::IndexOutOfRange, "factor index");
  const Rational diff = pr.l_at(i) - pr.l_at(i + 1);
  if (!diff.is_integer() || diff < 0) {
    raise(ErrorCode::InvalidInput, "l_i - l_{i+1} must be a non-negative integer");
  }
  return rodrigues_factor_apply(S_V(pr, i), static_cast<int>(diff.to_long()), g);
}

}  // namespace bp
