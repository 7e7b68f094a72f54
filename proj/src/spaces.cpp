/**
 * @file spaces.cpp
 * @brief Space construction, balanced bases, divided Wronskians, pairing.
 */

#include "bp/spaces.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "bp/errors.hpp"
#include "bp/linalg.hpp"
#include "bp/wronskian.hpp"

namespace bp {

namespace {

/**
 * Eliminate by vanishing order at 0: returns one representative per
 * attainable order, keyed by that order.  Span-preserving.
 */
std::map<int, Poly> order_pivots(const std::vector<Poly>& family) {
  std::map<int, Poly> pivots;
  for (Poly q : family) {
    while (!q.is_zero()) {
      const int o = q.order_at(Rational(0));
      auto it = pivots.find(o);
      if (it == pivots.end()) {
        pivots.emplace(o, q);
        break;
      }
      q -= (q.coeff(o) / it->second.coeff(o)) * it->second;
    }
  }
  return pivots;
}

/// Expected degree/order data for a space of the given kind.
struct FlagData {
  std::vector<int> degrees;
  std::vector<int> orders0;
  std::vector<int> orders1;
};

FlagData expected_flags(const Params& pr, SpaceKind kind) {
  const ExponentData ed = exponents(pr);
  const auto& deg = (kind == SpaceKind::V) ? ed.eV : ed.eU;
  const auto& ord0 = (kind == SpaceKind::V) ? ed.orders0V : ed.orders0U;
  const auto& ord1 = (kind == SpaceKind::V) ? ed.orders1V : ed.orders1U;
  FlagData out;
  for (const auto& seq : {deg, ord0, ord1}) {
    std::vector<int> v;
    v.reserve(seq.size());
    for (const Rational& x : seq) {
      if (!x.is_integer())
        raise(ErrorCode::InternalExponentMismatch, "non-integer exponent for a consistent space");
      v.push_back(static_cast<int>(x.to_long()));
    }
    if (out.degrees.empty())
      out.degrees = v;
    else if (out.orders0.empty())
      out.orders0 = v;
    else
      out.orders1 = v;
  }
  return out;
}

/// Verify the balanced basis and the attainable orders at 1 of a built space.
void verify_flags(const PolySpace& sp) {
  const FlagData want = expected_flags(sp.params, sp.kind);
  const std::size_t n = static_cast<std::size_t>(sp.params.r) + 1;
  if (sp.basis.size() != n)
    raise(ErrorCode::InternalExponentMismatch, "basis size differs from r + 1");
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& b = sp.basis[i];
    if (b.leading() != Rational(1))
      raise(ErrorCode::InternalExponentMismatch, "basis element is not monic");
    if (b.degree() != want.degrees[i])
      raise(ErrorCode::InternalExponentMismatch, "basis degree differs from exponent data");
    if (b.order_at(Rational(0)) != want.orders0[i])
      raise(ErrorCode::InternalExponentMismatch, "root order at 0 differs from exponent data");
  }
  if (attainable_orders(sp.basis, Rational(1)) != want.orders1)
    raise(ErrorCode::InternalExponentMismatch, "root orders at 1 differ from exponent data");
}

}  // namespace

std::vector<Poly> balanced_basis(const std::vector<Poly>& family) {
  const std::vector<Poly> ech = echelon_basis(family);
  std::vector<Poly> out;
  out.reserve(ech.size());
  std::vector<Poly> prefix;
  for (const Poly& p : ech) {
    prefix.push_back(p);
    const std::map<int, Poly> pivots = order_pivots(prefix);
    out.push_back(pivots.rbegin()->second.monic());
  }
  return out;
}

std::vector<int> attainable_orders(const std::vector<Poly>& family, const Rational& point) {
  std::vector<Poly> shifted;
  shifted.reserve(family.size());
  for (const Poly& p : family) shifted.push_back(p.shifted(point));
  std::vector<int> orders;
  for (const auto& [o, p] : order_pivots(shifted)) orders.push_back(o);
  return orders;
}

PolySpace base_space_V0(const std::vector<Rational>& m) {
  const int r = static_cast<int>(m.size());
  Params pr;
  pr.r = r;
  pr.m = m;
  pr.l.assign(static_cast<std::size_t>(std::max(r, 0)), 0);
  pr.k = Rational(0);
  std::vector<Poly> basis;
  Rational s(0);
  for (int i = 0; i <= r; ++i) {
    if (i > 0) s += m[static_cast<std::size_t>(i) - 1] + Rational(1);
    if (!s.is_integer() || s < Rational(0))
      raise(ErrorCode::InvalidInput, "base space needs non-negative integer exponent partial sums");
    basis.push_back(Poly::monomial(static_cast<int>(s.to_long())));
  }
  return PolySpace{SpaceKind::V, pr, std::move(basis)};
}

PolySpace build_V(const Params& pr) {
  require_consistent(pr);
  const std::vector<int> chain = ladder_indices(pr);
  Params cur = Params::make(pr.m, std::vector<int>(static_cast<std::size_t>(pr.r), 0), Rational(0));
  std::vector<Poly> basis = base_space_V0(pr.m).basis;
  for (int idx : chain) {
    const FirstOrderOp D = op_D(cur, idx);
    for (Poly& b : basis) b = D.apply(b);
    cur = cur.raised(idx);
  }
  if (!(cur == pr))
    raise(ErrorCode::InternalExponentMismatch, "ladder composition missed the target parameters");
  PolySpace sp{SpaceKind::V, pr, balanced_basis(basis)};
  verify_flags(sp);
  return sp;
}

PolySpace build_U(const Params& pr) {
  require_consistent(pr);
  const PolySpace V = build_V(pr);
  const WeightTuple weights = weights_V(pr);
  const std::size_t n = V.basis.size();
  std::vector<Poly> basis(n);
  for (std::size_t omit = 0; omit < n; ++omit) {
    std::vector<Poly> fs;
    fs.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != omit) fs.push_back(V.basis[j]);
    basis[n - 1 - omit] = divided_wronskian_raw(fs, weights.T).monic();
  }
  PolySpace sp{SpaceKind::U, pr, std::move(basis)};
  verify_flags(sp);
  return sp;
}

Poly divided_wronskian_raw(const std::vector<Poly>& fs,
                           const std::vector<GeneralizedForm>& weights) {
  const int n = static_cast<int>(fs.size());
  if (n - 1 > static_cast<int>(weights.size()))
    raise(ErrorCode::InvalidInput, "divided Wronskian needs n - 1 weight factors");
  Poly w = wronskian(fs);
  Rational a(0), b(0);
  Poly fpart = Poly::one();
  for (int j = 1; j < n; ++j) {
    const GeneralizedForm& t = weights[static_cast<std::size_t>(j) - 1];
    a += Rational(n - j) * t.a;
    b += Rational(n - j) * t.b;
    fpart = fpart * poly_pow(t.f, n - j);
  }
  if (!a.is_integer() || a < Rational(0) || !b.is_integer() || b < Rational(0))
    raise(ErrorCode::NonExactDivision, "weight divisor has non-integer or negative exponents");
  if (fpart.degree() > 0 || fpart.coeff(0) != Rational(1)) w = Poly::exact_div(w, fpart);
  w = Poly::exact_div(w, Poly::monomial(static_cast<int>(a.to_long())));
  return Poly::exact_div(w, linear_power(Rational(1), static_cast<int>(b.to_long())));
}

Poly divided_wronskian(const PolySpace& space, const std::vector<int>& indices) {
  if (indices.empty()) raise(ErrorCode::InvalidInput, "index subset must be nonempty");
  const int n = static_cast<int>(space.basis.size());
  std::vector<Poly> fs;
  fs.reserve(indices.size());
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i >= n)
      raise(ErrorCode::InvalidInput, "indices must be strictly ascending members of 0..r");
    prev = i;
    fs.push_back(space.basis[static_cast<std::size_t>(i)]);
  }
  const WeightTuple weights =
      (space.kind == SpaceKind::V) ? weights_V(space.params) : weights_U(space.params);
  return divided_wronskian_raw(fs, weights.T);
}

Rational pairing_with_space(const Poly& f, const Poly& g, const PolySpace& V) {
  if (V.kind != SpaceKind::V)
    raise(ErrorCode::InvalidInput, "pairing expects a primary-kind space");
  if (!coordinates_in_span(V.basis, f))
    raise(ErrorCode::NotInSpace, "first pairing operand is outside the primary span");
  const WeightTuple weights = weights_V(V.params);
  const std::size_t n = V.basis.size();
  std::vector<Poly> duals;
  duals.reserve(n);
  for (std::size_t omit = 0; omit < n; ++omit) {
    std::vector<Poly> fs;
    fs.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != omit) fs.push_back(V.basis[j]);
    duals.push_back(divided_wronskian_raw(fs, weights.T));
  }
  const auto gamma = coordinates_in_span(duals, g);
  if (!gamma)
    raise(ErrorCode::NotInSpace, "second pairing operand is outside the dual span");
  Rational result(0);
  for (std::size_t omit = 0; omit < n; ++omit) {
    if ((*gamma)[omit] == Rational(0)) continue;
    std::vector<Poly> fs;
    fs.reserve(n);
    fs.push_back(f);
    for (std::size_t j = 0; j < n; ++j)
      if (j != omit) fs.push_back(V.basis[j]);
    const Poly value = divided_wronskian_raw(fs, weights.T);
    if (value.degree() > 0)
      raise(ErrorCode::InternalExponentMismatch, "pairing summand is not a constant");
    result += (*gamma)[omit] * value.coeff(0);
  }
  return result;
}

Rational pairing(const Poly& f, const Poly& g, const Params& pr) {
  return pairing_with_space(f, g, build_V(pr));
}

Poly u_inclusion_project(const Poly& g, const std::vector<Rational>& mbar_tail) {
  GeneralizedForm cur = gf_from_poly(g);
  for (auto it = mbar_tail.rbegin(); it != mbar_tail.rend(); ++it)
    cur = gf_mul_xpow(gf_derivative(cur), -*it);
  return gf_normalize(cur);
}

Poly structured_basis_element(const PolySpace& V, int i) {
  if (V.kind != SpaceKind::V)
    raise(ErrorCode::InvalidInput, "structured element is defined for the primary kind");
  const Params& pr = V.params;
  if (i < 1 || i > pr.r) raise(ErrorCode::IndexOutOfRange, "structured element index must be 1..r");
  const int k1 = static_cast<int>(pr.k_int()) + 1;
  const Poly mod = linear_power(Rational(1), k1);
  const Poly& lo = V.basis[static_cast<std::size_t>(i) - 1];
  const Poly& hi = V.basis[static_cast<std::size_t>(i)];
  const Poly rem_lo = Poly::divmod(lo, mod).second;
  const Poly rem_hi = Poly::divmod(hi, mod).second;
  if (rem_lo.is_zero())
    raise(ErrorCode::InternalExponentMismatch, "unexpected full divisibility in structured solve");
  const int o = rem_lo.order_at(Rational(0));
  const Rational c = -rem_hi.coeff(o) / rem_lo.coeff(o);
  if (!(rem_hi + c * rem_lo).is_zero())
    raise(ErrorCode::InternalExponentMismatch, "no structured combination exists");
  const Poly g = (hi + c * lo).monic();
  const Rational s = S_V(pr, i - 1);
  if (!s.is_integer() || g.order_at(Rational(0)) != static_cast<int>(s.to_long()) ||
      g.order_at(Rational(1)) < k1)
    raise(ErrorCode::InternalExponentMismatch, "structured element has wrong root orders");
  return g;
}

}  // namespace bp
