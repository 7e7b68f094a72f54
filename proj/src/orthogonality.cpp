/**
 * @file orthogonality.cpp
 * @brief Exact Beta-moment calculus and the orthogonality / norm /
 *        adjointness verification suites.
 */

#include "bp/orthogonality.hpp"

#include <cmath>
#include <utility>

#include "bp/errors.hpp"
#include "bp/linalg.hpp"
#include "bp/operators.hpp"
#include "bp/pineiro.hpp"

namespace bp {

namespace {

/// Gamma(x)/Gamma(y) for integer x - y, via Gamma(z+1) = z Gamma(z).
Rational gamma_ratio(const Rational& x, const Rational& y) {
  Rational d = x - y;
  if (!d.is_integer()) {
    throw Error(ErrorCode::NonIntegerShift,
                "gamma_ratio: arguments differ by a non-integer");
  }
  long n = d.to_long();
  Rational out(1);
  if (n >= 0) {
    for (long j = 0; j < n; ++j) {
      Rational factor = y + Rational(j);
      if (factor.is_zero()) {
        throw Error(ErrorCode::GammaPole,
                    "gamma_ratio: functional-equation ladder crosses a pole");
      }
      out *= factor;
    }
  } else {
    for (long j = 0; j < -n; ++j) {
      Rational factor = x + Rational(j);
      if (factor.is_zero()) {
        throw Error(ErrorCode::GammaPole,
                    "gamma_ratio: functional-equation ladder crosses a pole");
      }
      out /= factor;
    }
  }
  return out;
}

/// Validates the (m, l) shape shared by the check_* entry points.
void require_shape(const std::vector<Rational>& m, const std::vector<int>& l) {
  if (m.empty() || m.size() != l.size()) {
    throw Error(ErrorCode::InvalidInput,
                "orthogonality: m and l must be non-empty and equally sized");
  }
  for (size_t i = 0; i + 1 < l.size(); ++i) {
    if (l[i] < l[i + 1]) {
      throw Error(ErrorCode::InvalidInput,
                  "orthogonality: l must be non-increasing");
    }
  }
  if (l.back() < 0) {
    throw Error(ErrorCode::InvalidInput, "orthogonality: l must be non-negative");
  }
}

}  // namespace

JacobiWeight pairing_weight(const Rational& a, const Rational& c) {
  return JacobiWeight{-a - 1, -c - 1};
}

Rational moment_ratio(const JacobiWeight& w, int n) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidInput, "moment_ratio: n must be non-negative");
  }
  Rational out(1);
  for (int j = 0; j < n; ++j) {
    Rational num = w.a + Rational(j + 1);
    Rational den = w.a + w.b + Rational(j + 2);
    if (num.is_zero() || den.is_zero()) {
      throw Error(ErrorCode::MomentPole,
                  "moment_ratio: recurrence factor vanishes");
    }
    out *= num / den;
  }
  return out;
}

Rational beta_ratio(const Rational& a1, const Rational& b1, const Rational& a2,
                    const Rational& b2) {
  return gamma_ratio(a1, a2) * gamma_ratio(b1, b2) *
         gamma_ratio(a2 + b2, a1 + b1);
}

Rational inner_product(const Poly& f, const Poly& g, const JacobiWeight& w,
                       const JacobiWeight& ref) {
  Poly h = f * g;
  if (h.is_zero()) return Rational(0);
  Rational sum(0);
  Rational mu(1);  // mu_n / mu_0 of w, built incrementally
  for (int n = 0; n <= h.degree(); ++n) {
    if (n > 0) {
      Rational num = w.a + Rational(n);
      Rational den = w.a + w.b + Rational(n + 1);
      if (num.is_zero() || den.is_zero()) {
        throw Error(ErrorCode::MomentPole,
                    "inner_product: moment recurrence factor vanishes");
      }
      mu *= num / den;
    }
    if (!h.coeff(n).is_zero()) sum += h.coeff(n) * mu;
  }
  if (sum.is_zero()) return Rational(0);
  return sum * beta_ratio(w.a + 1, w.b + 1, ref.a + 1, ref.b + 1);
}

Rational pairing_ratio(const Poly& f, const Poly& g, const Rational& a,
                       const Rational& c, const Rational& aref,
                       const Rational& cref) {
  return inner_product(f, g, pairing_weight(a, c), pairing_weight(aref, cref));
}

bool check_pineiro_orthogonality(const std::vector<Rational>& m,
                                 const std::vector<int>& l, const Rational& k) {
  require_shape(m, l);
  const int r = static_cast<int>(m.size());
  Poly P = pineiro_rodrigues(m, l, k);
  Rational am = Rational(r - 1);
  for (const auto& mi : m) am += mi;  // |m| = m_1 + .. + m_r + r - 1
  for (int i = 0; i < r; ++i) {
    int hi = l[r - i - 1];
    int lo = (r - i + 1 <= r) ? l[r - i] : 0;
    Rational suffix(0);  // m_{r-i+1} + .. + m_r
    for (int j = r - i + 1; j <= r; ++j) suffix += m[j - 1];
    for (int t = i; t < i + (hi - lo); ++t) {
      Rational s = suffix + Rational(t);
      JacobiWeight w{s - am - 1, -k - 1};
      if (inner_product(P, Poly::one(), w, w) != Rational(0)) return false;
    }
  }
  return true;
}

std::map<std::string, Rational> check_norm_formulas(const std::vector<Rational>& m,
                                                    const std::vector<int>& l,
                                                    const Rational& k) {
  require_shape(m, l);
  const int r = static_cast<int>(m.size());
  Params pr = Params::make(m, l, k);
  const Rational am = pr.m_total();
  const int l1 = l[0];
  const int lr = l[r - 1];

  Poly y1 = pineiro_rodrigues(m, l, k);
  Poly yr = u0_explicit(m, l, k);
  Rational N = pairing_ratio(y1, yr, am + 1, k, am + 1, k - Rational(l1));

  std::map<std::string, Rational> out;
  auto nonzero = [](Rational d) -> Rational {
    if (d.is_zero()) {
      throw Error(ErrorCode::GammaPole, "norm formula crosses a pole");
    }
    return d;
  };

  // Product of constant ratios along the descent of the index multiset.
  {
    Rational product(1);
    Params cur = pr;
    for (int i = r; i >= 1; --i) {
      int cnt = l[i - 1] - ((i < r) ? l[i] : 0);
      for (int t = 0; t < cnt; ++t) {
        Params low = cur.lowered(i);
        product *= lowering_constant(cur, i) / nonzero(raising_constant(low, i));
        cur = low;
      }
    }
    out["ladder_product"] = N - product;
  }

  // Fully expanded closed form of the same product.
  {
    Rational value = (lr % 2 == 0) ? factorial(lr) : -factorial(lr);
    for (int i = 0; i <= r - 1; ++i) {
      for (int j = 0; j < lr; ++j) {
        Rational base = pr.m_suffix(i + 1) + Rational(i - j);
        value *= base / nonzero(base + 1 + pr.l_at(r - i - 1) - pr.l_at(r - i));
      }
    }
    for (int i = 1; i <= r - 1; ++i) {
      for (int s = 0; s < l[i - 1] - l[i]; ++s) {
        value *= (pr.m_suffix(r - i) + Rational(r + 1 - i + s)) /
                 nonzero(pr.m_prefix(i) + Rational(i - s) + k - Rational(l1));
      }
    }
    for (int s = 0; s < lr; ++s) {
      value /= nonzero(pr.m_prefix(r) + Rational(r - s) + k - Rational(l1));
    }
    out["general_display"] = N - value;
  }

  if (r == 1) {
    Rational value = (l1 % 2 == 0) ? factorial(l1) : -factorial(l1);
    for (int i = 1; i <= l1; ++i) {
      Rational den = nonzero(k + m[0] + Rational(2 - l1 - i));
      value *= (m[0] + Rational(1 - i)) / (den * den);
    }
    out["r1_closed"] = N - value;
  }

  if (r == 2) {
    const int l2 = l[1];
    Rational value = (l2 % 2 == 0) ? factorial(l2) : -factorial(l2);
    for (int i = 0; i < l2; ++i) {
      Rational den2 = nonzero(k + m[0] + m[1] + Rational(2 - l1 - i));
      value *= (m[1] - Rational(i)) * (m[0] + m[1] + Rational(1 - i)) /
               (nonzero(m[1] + Rational(l1 - l2 + 1 - i)) * den2 * den2);
    }
    for (int i = 0; i < l1 - l2; ++i) {
      value *= (m[1] + Rational(2 + i)) /
               nonzero(k + m[0] + Rational(1 - l1 - i));
    }
    out["r2_closed"] = N - value;
  }

  return out;
}

bool check_integral_adjointness(const std::vector<Rational>& m,
                                const std::vector<int>& l, const Rational& k,
                                int i) {
  require_shape(m, l);
  const int r = static_cast<int>(m.size());
  if (i < 0 || i > r) {
    throw Error(ErrorCode::IndexOutOfRange,
                "check_integral_adjointness: direction out of range");
  }
  Params src = Params::make(m, l, k);
  FirstOrderOp D = op_D(src, i);
  FirstOrderOp Dv = op_Dvee(src.raised(i), i);
  const Rational am1 = src.m_total() + 1;
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= 6; ++q) {
      Poly f = Poly::monomial(p);
      Poly g = Poly::monomial(q);
      Rational lhs = pairing_ratio(D.apply(f), g, am1, k + 1, am1, k);
      Rational rhs = pairing_ratio(f, Dv.apply(g), am1, k, am1, k);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

double moment_ratio_numeric(const JacobiWeight& w, int n) {
  if (!w.integrable()) {
    throw Error(ErrorCode::InvalidInput,
                "moment_ratio_numeric: weight is not integrable");
  }
  if (n < 0) {
    throw Error(ErrorCode::InvalidInput,
                "moment_ratio_numeric: n must be non-negative");
  }
  const double a = w.a.to_double();
  const double b = w.b.to_double();
  const double h = 1.0 / 128.0;
  const double half_pi = std::acos(-1.0) / 2.0;
  double num = 0.0;
  double den = 0.0;
  for (int j = -896; j <= 896; ++j) {
    double t = j * h;
    double u = half_pi * std::sinh(t);
    // x = (1 + tanh u)/2, evaluated through logs for endpoint stability:
    // ln x = u - ln(2 cosh u), ln(1-x) = -u - ln(2 cosh u).
    double ln2cosh = std::fabs(u) + std::log1p(std::exp(-2.0 * std::fabs(u)));
    double lx = u - ln2cosh;
    double l1x = -u - ln2cosh;
    // dx/dt = (pi/2) cosh t / (2 cosh^2 u)
    double ln_jac = std::log(half_pi) + std::log(std::cosh(t)) - 2.0 * ln2cosh +
                    std::log(2.0);
    double base = a * lx + b * l1x + ln_jac;
    num += std::exp(base + n * lx);
    den += std::exp(base);
  }
  return num / den;
}

Poly orthogonality_characterized(const std::vector<Rational>& m,
                                 const std::vector<int>& l, const Rational& k) {
  require_shape(m, l);
  const int r = static_cast<int>(m.size());
  const int l1 = l[0];
  if (l1 == 0) return Poly::one();
  Rational am = Rational(r - 1);
  for (const auto& mi : m) am += mi;
  Matrix rows;
  std::vector<Rational> rhs;
  for (int i = 0; i < r; ++i) {
    int hi = l[r - i - 1];
    int lo = (r - i + 1 <= r) ? l[r - i] : 0;
    Rational suffix(0);
    for (int j = r - i + 1; j <= r; ++j) suffix += m[j - 1];
    for (int t = i; t < i + (hi - lo); ++t) {
      Rational s = suffix + Rational(t);
      JacobiWeight w{s - am - 1, -k - 1};
      std::vector<Rational> row(l1);
      for (int c = 0; c < l1; ++c) row[c] = moment_ratio(w, c);
      rows.push_back(std::move(row));
      rhs.push_back(-moment_ratio(w, l1));
    }
  }
  auto sol = solve_linear(std::move(rows), std::move(rhs));
  if (!sol) {
    throw Error(ErrorCode::InvalidInput,
                "orthogonality_characterized: moment system is singular");
  }
  std::vector<Rational> coeffs = *sol;
  coeffs.push_back(Rational(1));
  return Poly::from_coeffs(coeffs);
}

}  // namespace bp
