/**
 * @file params.cpp
 * @brief Parameter triples, exponent data, weights, and ladder bookkeeping.
 */

#include "bp/params.hpp"

#include <string>
#include <utility>

#include "bp/errors.hpp"

namespace bp {

Params Params::make(std::vector<Rational> m, std::vector<int> l, Rational k) {
  if (m.empty() || m.size() != l.size()) {
    raise(ErrorCode::InvalidInput,
          "parameter vectors m and l must be nonempty and of equal length");
  }
  Params p;
  p.r = static_cast<int>(m.size());
  p.m = std::move(m);
  p.l = std::move(l);
  p.k = std::move(k);
  return p;
}

const Rational& Params::m_at(int i) const {
  if (i < 1 || i > r) raise(ErrorCode::InvalidInput, "m index out of range");
  return m[static_cast<size_t>(i - 1)];
}

Rational Params::l_at(int i) const {
  if (i == 0) return k;
  return Rational(l_int(i));
}

int Params::l_int(int i) const {
  if (i < 1 || i > r + 1) raise(ErrorCode::InvalidInput, "l index out of range");
  if (i == r + 1) return 0;
  return l[static_cast<size_t>(i - 1)];
}

long Params::k_int() const {
  if (!k.is_integer()) raise(ErrorCode::InvalidInput, "k must be an integer here");
  return k.to_long();
}

Rational Params::m_prefix(int i) const {
  Rational s(0);
  for (int j = 1; j <= i; ++j) s += m_at(j);
  return s;
}

Rational Params::m_suffix(int i) const {
  Rational s(0);
  for (int j = r + 1 - i; j <= r; ++j) s += m_at(j);
  return s;
}

Rational Params::m_total() const { return m_prefix(r) + Rational(r - 1); }

Params Params::raised(int i) const {
  if (i < 0 || i > r) raise(ErrorCode::IndexOutOfRange, "ladder index out of range");
  Params q = *this;
  for (int j = 0; j < i; ++j) q.l[static_cast<size_t>(j)] += 1;
  q.k += Rational(1);
  return q;
}

Params Params::lowered(int i) const {
  if (i < 0 || i > r) raise(ErrorCode::IndexOutOfRange, "ladder index out of range");
  Params q = *this;
  for (int j = 0; j < i; ++j) q.l[static_cast<size_t>(j)] -= 1;
  q.k -= Rational(1);
  return q;
}

bool is_consistent(const Params& p) {
  if (!p.k.is_integer() || p.k.is_negative()) return false;
  for (const Rational& mi : p.m) {
    if (!mi.is_integer() || mi.is_negative()) return false;
  }
  long k = p.k.to_long();
  if (k < p.l_int(1)) return false;
  for (int s = 1; s <= p.r; ++s) {
    int ls = p.l_int(s);
    int ls1 = p.l_int(s + 1);
    if (ls < ls1 || ls1 < 0) return false;
    if (Rational(ls - ls1) > p.m_at(s)) return false;
  }
  return p.l_int(p.r) >= 0;
}

void require_consistent(const Params& p) {
  if (!is_consistent(p)) {
    raise(ErrorCode::Inconsistent, "parameters violate the consistency inequalities");
  }
}

Rational e_V(const Params& p, int i) {
  if (i < 0 || i > p.r) raise(ErrorCode::IndexOutOfRange, "exponent index out of range");
  return p.k + p.m_prefix(i) - p.l_at(i) + p.l_at(i + 1) + Rational(i);
}

Rational e_U(const Params& p, int i) {
  if (i < 0 || i > p.r) raise(ErrorCode::IndexOutOfRange, "exponent index out of range");
  return p.m_suffix(i) - p.l_at(p.r - i + 1) + p.l_at(p.r - i) + Rational(i);
}

Rational S_V(const Params& p, int i) {
  if (i < 0 || i > p.r) raise(ErrorCode::IndexOutOfRange, "order index out of range");
  return p.m_prefix(i) + Rational(i);
}

Rational S_U(const Params& p, int i) {
  if (i < 0 || i > p.r) raise(ErrorCode::IndexOutOfRange, "order index out of range");
  return p.m_suffix(i) + Rational(i);
}

ExponentData exponents(const Params& p) {
  ExponentData d;
  for (int i = 0; i <= p.r; ++i) {
    d.eV.push_back(e_V(p, i));
    d.eU.push_back(e_U(p, i));
    d.orders0V.push_back(S_V(p, i));
    d.orders0U.push_back(S_U(p, i));
  }
  // Orders at 1: the primary space realizes {0, k+1, ..., k+r}; the dual
  // space realizes {0, 1, ..., r-1, k+r}.
  d.orders1V.push_back(Rational(0));
  for (int i = 1; i <= p.r; ++i) d.orders1V.push_back(p.k + Rational(i));
  for (int i = 0; i <= p.r - 1; ++i) d.orders1U.push_back(Rational(i));
  d.orders1U.push_back(p.k + Rational(p.r));
  return d;
}

WeightTuple weights_V(const Params& p) {
  WeightTuple w;
  for (int i = 1; i <= p.r; ++i) {
    GeneralizedForm t{p.m_at(i), i == 1 ? p.k : Rational(0), Poly::one()};
    w.T.push_back(t);
  }
  return w;
}

WeightTuple weights_U(const Params& p) {
  WeightTuple v = weights_V(p);
  WeightTuple w;
  for (int i = p.r; i >= 1; --i) w.T.push_back(v.T[static_cast<size_t>(i - 1)]);
  return w;
}

std::vector<int> ladder_indices(const Params& p) {
  long k = p.k_int();
  if (k < p.l_int(1)) {
    raise(ErrorCode::InvalidInput, "ladder requires k >= l_1");
  }
  std::vector<int> idx;
  for (long t = 0; t < k - p.l_int(1); ++t) idx.push_back(0);
  for (int i = 1; i <= p.r; ++i) {
    int count = p.l_int(i) - p.l_int(i + 1);
    if (count < 0) raise(ErrorCode::InvalidInput, "l must be weakly decreasing");
    for (int t = 0; t < count; ++t) idx.push_back(i);
  }
  return idx;
}

}  // namespace bp
