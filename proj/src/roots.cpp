#include "bp/roots.hpp"

#include <algorithm>

namespace bp {

namespace {

/// Sturm chain of a polynomial: s0 = f, s1 = f', then negated remainders,
/// each scaled by a positive constant to keep coefficients small.
std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = -Poly::divmod(a, b).second;
    if (!r.is_zero()) r = r.leading().abs().inverse() * r;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  return chain;
}

int sign_at(const Poly& p, const Rational& x) { return p.eval(x).sign(); }

/// Sign of p at +infinity (dir = +1) or -infinity (dir = -1).
int sign_at_infinity(const Poly& p, int dir) {
  if (p.is_zero()) return 0;
  int s = p.leading().sign();
  if (dir < 0 && (p.degree() % 2 == 1)) s = -s;
  return s;
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at(p, x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<Poly>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at_infinity(p, dir));
  return variations(signs);
}

/// Roots of the square-free polynomial g in (lo, hi), both endpoints
/// guaranteed non-roots; appends approximations to out.
void isolate(const Poly& g, const std::vector<Poly>& chain, const Rational& lo,
             const Rational& hi, int count, const Rational& precision,
             std::vector<RootApprox>& out) {
  if (count == 0) return;
  if (g.degree() == 1) {
    out.push_back({-g.coeff(0) / g.coeff(1), 1, true});
    return;
  }
  if (count == 1) {
    // A single simple root in (lo, hi): the sign changes across it.
    Rational a = lo, b = hi;
    int sa = sign_at(g, a);
    while (b - a > precision) {
      const Rational mid = (a + b) / Rational(2);
      const int sm = sign_at(g, mid);
      if (sm == 0) {
        out.push_back({mid, 1, true});
        return;
      }
      if (sm == sa) {
        a = mid;
        sa = sm;
      } else {
        b = mid;
      }
    }
    out.push_back({(a + b) / Rational(2), 1, false});
    return;
  }
  Rational mid = (lo + hi) / Rational(2);
  if (sign_at(g, mid) == 0) {
    out.push_back({mid, 1, true});
    // Shrink an exclusion window around the exact root until it contains no
    // other root, then recurse on both sides.
    Rational delta = (hi - lo) / Rational(4);
    for (;;) {
      const Rational a = mid - delta, b = mid + delta;
      if (sign_at(g, a) != 0 && sign_at(g, b) != 0 &&
          variations_at(chain, a) - variations_at(chain, b) == 1)
        break;
      delta /= Rational(2);
    }
    const Rational a = mid - delta, b = mid + delta;
    isolate(g, chain, lo, a, variations_at(chain, lo) - variations_at(chain, a), precision, out);
    isolate(g, chain, b, hi, variations_at(chain, b) - variations_at(chain, hi), precision, out);
    return;
  }
  const int left = variations_at(chain, lo) - variations_at(chain, mid);
  isolate(g, chain, lo, mid, left, precision, out);
  isolate(g, chain, mid, hi, count - left, precision, out);
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) raise(ErrorCode::InvalidInput, "square-free decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() == 0) return out;
  // Yun's algorithm over the rationals, with monic normalization throughout.
  const Poly fp = f.derivative();
  Poly a0 = poly_gcd(f, fp);
  Poly b = Poly::divmod(f, a0).first.monic();
  Poly c = Poly::divmod(fp, a0).first;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly ai = poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = Poly::divmod(b, ai).first.monic();
    c = Poly::divmod(d, ai).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) raise(ErrorCode::InvalidInput, "square-free part of zero");
  if (f.degree() == 0) return Poly::one();
  return Poly::divmod(f, poly_gcd(f, f.derivative())).first.monic();
}

int count_real_roots(const Poly& f) {
  if (f.is_zero()) raise(ErrorCode::InvalidInput, "root count of zero polynomial");
  if (f.degree() == 0) return 0;
  const auto chain = sturm_chain(squarefree_part(f));
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

int count_real_roots_in(const Poly& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) raise(ErrorCode::InvalidInput, "root count of zero polynomial");
  if (!(lo < hi)) raise(ErrorCode::InvalidInput, "empty interval for root count");
  if (f.eval(lo).is_zero() || f.eval(hi).is_zero())
    raise(ErrorCode::InvalidInput, "root-count endpoints must not be roots");
  if (f.degree() == 0) return 0;
  const auto chain = sturm_chain(squarefree_part(f));
  return variations_at(chain, lo) - variations_at(chain, hi);
}

Rational cauchy_root_bound(const Poly& f) {
  if (f.is_zero()) raise(ErrorCode::InvalidInput, "root bound of zero polynomial");
  Rational maxratio(0);
  const Rational lead = f.leading().abs();
  for (int i = 0; i < f.degree(); ++i)
    maxratio = std::max(maxratio, f.coeff(i).abs() / lead);
  return Rational(1) + maxratio;
}

std::vector<RootApprox> real_roots(const Poly& f, const Rational& precision) {
  if (f.is_zero()) raise(ErrorCode::InvalidInput, "roots of zero polynomial");
  if (precision <= Rational(0)) raise(ErrorCode::InvalidInput, "precision must be positive");
  std::vector<RootApprox> out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    const auto chain = sturm_chain(g);
    const Rational bound = cauchy_root_bound(g);
    const Rational lo = -bound, hi = bound;
    const int count = variations_at(chain, lo) - variations_at(chain, hi);
    std::vector<RootApprox> part;
    isolate(g, chain, lo, hi, count, precision, part);
    for (auto& root : part) {
      root.multiplicity = mult;
      out.push_back(std::move(root));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootApprox& a, const RootApprox& b) { return a.value < b.value; });
  return out;
}

}  // namespace bp
