/**
 * @file bethe.cpp
 * @brief Bethe tuples, genericity, equation residuals, solving, the scalar
 *        weight function, and the counterexample scanner.
 */

#include "bp/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <utility>

#include "bp/errors.hpp"
#include "bp/parallel.hpp"
#include "bp/roots.hpp"
#include "bp/spaces.hpp"

namespace bp {

namespace {

/// Group sizes of a grouped coordinate vector.
template <typename T>
std::vector<int> sizes_of(const std::vector<std::vector<T>>& groups) {
  std::vector<int> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(static_cast<int>(g.size()));
  return out;
}

/// Shared sanity checks: group sizes match l, no coordinate at a marked
/// point, no collision within a level or across adjacent levels.
template <typename T>
void check_point(const std::vector<std::vector<T>>& groups, const Params& pr,
                 const T& zero, const T& one) {
  if (static_cast<int>(groups.size()) != pr.r)
    raise(ErrorCode::InvalidInput, "coordinate group count does not match the rank");
  for (int j = 1; j <= pr.r; ++j) {
    const auto& g = groups[static_cast<std::size_t>(j) - 1];
    if (static_cast<int>(g.size()) != pr.l_int(j))
      raise(ErrorCode::InvalidInput, "coordinate group size does not match l");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == zero)
        raise(ErrorCode::CoordinateAtSingularPoint, "coordinate at the marked point 0");
      if (j == 1 && g[i] == one)
        raise(ErrorCode::CoordinateAtSingularPoint,
              "level-one coordinate at the marked point 1");
      for (std::size_t s = i + 1; s < g.size(); ++s)
        if (g[i] == g[s])
          raise(ErrorCode::CoincidingCoordinates, "two coordinates on one level coincide");
    }
    if (j < pr.r) {
      const auto& h = groups[static_cast<std::size_t>(j)];
      for (const T& a : g)
        for (const T& b : h)
          if (a == b)
            raise(ErrorCode::CoincidingCoordinates,
                  "coordinates on adjacent levels coincide");
    }
  }
}

/// All equation left-hand sides (levels concatenated) over a field type.
template <typename T>
std::vector<T> residuals_impl(const std::vector<std::vector<T>>& groups,
                              const std::vector<T>& m, const T& k) {
  const int r = static_cast<int>(groups.size());
  std::vector<T> out;
  for (int j = 1; j <= r; ++j) {
    const auto& g = groups[static_cast<std::size_t>(j) - 1];
    for (std::size_t i = 0; i < g.size(); ++i) {
      const T& t = g[i];
      T acc = m[static_cast<std::size_t>(j) - 1] / t;
      if (j == 1) acc += k / (t - T(1));
      for (std::size_t s = 0; s < g.size(); ++s)
        if (s != i) acc -= T(2) / (t - g[s]);
      if (j > 1)
        for (const T& u : groups[static_cast<std::size_t>(j) - 2]) acc += T(1) / (t - u);
      if (j < r)
        for (const T& u : groups[static_cast<std::size_t>(j)]) acc += T(1) / (t - u);
      out.push_back(acc);
    }
  }
  return out;
}

}  // namespace

BethePoint BethePoint::from_exact(std::vector<std::vector<Rational>> groups) {
  BethePoint p;
  p.exact = std::move(groups);
  return p;
}

BethePoint BethePoint::from_numeric(
    std::vector<std::vector<std::complex<double>>> groups) {
  BethePoint p;
  p.numeric = std::move(groups);
  if (p.numeric.empty()) p.numeric.emplace_back();  // keep the variant decidable
  return p;
}

std::vector<int> BethePoint::level_sizes() const {
  return is_exact() ? sizes_of(exact) : sizes_of(numeric);
}

YTuple y_tuple(const Params& pr) {
  require_consistent(pr);
  const PolySpace V = build_V(pr);
  YTuple out;
  for (int i = 1; i <= pr.r; ++i) {
    std::vector<int> indices(static_cast<std::size_t>(i));
    std::iota(indices.begin(), indices.end(), 0);
    Poly y = divided_wronskian(V, indices).monic();
    if (y.degree() != pr.l_int(i))
      raise(ErrorCode::InternalExponentMismatch,
            "tuple entry degree disagrees with l");
    out.ys.push_back(std::move(y));
  }
  return out;
}

YTuple y_tuple_from_basis(const std::vector<Poly>& family,
                          const std::vector<GeneralizedForm>& weights) {
  if (family.size() < 2)
    raise(ErrorCode::InvalidInput, "tuple extraction needs at least two functions");
  const std::vector<Poly> basis = balanced_basis(family);
  const int r = static_cast<int>(basis.size()) - 1;
  if (static_cast<int>(weights.size()) < r - 1)
    raise(ErrorCode::InvalidInput, "tuple extraction needs at least n - 1 weights");
  YTuple out;
  for (int i = 1; i <= r; ++i) {
    const std::vector<Poly> prefix(basis.begin(), basis.begin() + i);
    Poly y = divided_wronskian_raw(prefix, weights);
    if (y.is_zero())
      raise(ErrorCode::InvalidInput, "degenerate family: a prefix Wronskian vanished");
    out.ys.push_back(y.monic());
  }
  return out;
}

GenericityReport is_generic(const YTuple& yt, const Params& pr) {
  const int r = static_cast<int>(yt.ys.size());
  if (r != pr.r)
    raise(ErrorCode::InvalidInput, "tuple length does not match the rank");
  GenericityReport rep;
  auto note = [&rep](bool ok, const std::string& why) {
    if (!ok && rep.generic) {
      rep.generic = false;
      rep.witness = why;
    }
    return ok;
  };
  for (int i = 0; i < r; ++i) {
    const Poly& y = yt.ys[static_cast<std::size_t>(i)];
    const Poly g = poly_gcd(y, y.derivative());
    rep.squarefree.push_back(note(
        g.degree() <= 0,
        "y" + std::to_string(i + 1) + " has a multiple root: gcd with derivative is " +
            g.str()));
  }
  for (int i = 0; i + 1 < r; ++i) {
    const Poly g = poly_gcd(yt.ys[static_cast<std::size_t>(i)],
                            yt.ys[static_cast<std::size_t>(i) + 1]);
    rep.neighbor_coprime.push_back(
        note(g.degree() <= 0, "gcd(y" + std::to_string(i + 1) + ", y" +
                                  std::to_string(i + 2) + ") = " + g.str()));
  }
  for (int i = 0; i < r; ++i) {
    const Poly& y = yt.ys[static_cast<std::size_t>(i)];
    bool ok = y.eval(Rational(0)) != Rational(0);
    std::string why = "y" + std::to_string(i + 1) + "(0) = 0";
    if (ok && i == 0 && y.eval(Rational(1)) == Rational(0)) {
      ok = false;
      why = "y1(1) = 0";
    }
    rep.weight_coprime.push_back(note(ok, why));
  }
  return rep;
}

Rational bae_residual_rational(const BethePoint& t, const Params& pr) {
  if (!t.is_exact())
    raise(ErrorCode::InvalidInput, "exact residual needs a rational point");
  check_point(t.exact, pr, Rational(0), Rational(1));
  std::vector<Rational> m;
  for (int j = 1; j <= pr.r; ++j) m.push_back(pr.m_at(j));
  Rational worst(0);
  for (const Rational& v : residuals_impl(t.exact, m, pr.k)) {
    const Rational a = v.abs();
    if (worst < a) worst = a;
  }
  return worst;
}

double bae_residual(const BethePoint& t, const Params& pr) {
  if (t.is_exact()) return bae_residual_rational(t, pr).to_double();
  using Cx = std::complex<double>;
  check_point(t.numeric, pr, Cx(0.0), Cx(1.0));
  std::vector<Cx> m;
  for (int j = 1; j <= pr.r; ++j) m.emplace_back(pr.m_at(j).to_double());
  double worst = 0.0;
  for (const Cx& v : residuals_impl(t.numeric, m, Cx(pr.k.to_double())))
    worst = std::max(worst, std::abs(v));
  return worst;
}

BaeResult solve_bae(const Params& pr, const Rational& precision) {
  require_consistent(pr);
  BaeResult res;
  res.tuple = y_tuple(pr);
  res.witness = is_generic(res.tuple, pr);
  if (!res.witness.generic) {
    res.outcome = BaeOutcome::NoSolution;
    return res;
  }
  std::vector<std::vector<Rational>> groups(static_cast<std::size_t>(pr.r));
  for (int i = 1; i <= pr.r; ++i) {
    const Poly& y = res.tuple.ys[static_cast<std::size_t>(i) - 1];
    if (pr.l_int(i) == 0) continue;
    const auto roots = real_roots(y, precision);
    if (static_cast<int>(roots.size()) < pr.l_int(i)) {
      res.outcome = BaeOutcome::ComplexRootsDetected;
      return res;
    }
    for (const RootApprox& root : roots)
      groups[static_cast<std::size_t>(i) - 1].push_back(root.value);
  }
  res.point = BethePoint::from_exact(std::move(groups));
  res.residual = bae_residual(res.point, pr);
  res.outcome = BaeOutcome::Solution;
  return res;
}

Rational nu_weight(const BethePoint& t, const std::vector<int>& l) {
  if (!t.is_exact())
    raise(ErrorCode::InvalidInput, "the weight function needs a rational point");
  const int r = static_cast<int>(l.size());
  if (static_cast<int>(t.exact.size()) != r)
    raise(ErrorCode::InvalidInput, "coordinate group count does not match l");
  for (int j = 0; j < r; ++j) {
    if (l[static_cast<std::size_t>(j)] < 0 ||
        (j + 1 < r && l[static_cast<std::size_t>(j)] < l[static_cast<std::size_t>(j) + 1]))
      raise(ErrorCode::InvalidInput, "l must be a partition");
    if (l[static_cast<std::size_t>(j)] > 6)
      raise(ErrorCode::InvalidInput, "symmetrization guard: every l_i must be <= 6");
    if (static_cast<int>(t.exact[static_cast<std::size_t>(j)].size()) !=
        l[static_cast<std::size_t>(j)])
      raise(ErrorCode::InvalidInput, "coordinate group size does not match l");
  }
  auto l_at = [&](int j) { return j <= r ? l[static_cast<std::size_t>(j) - 1] : 0; };
  // Independent permutations per level, advanced as an odometer.
  std::vector<std::vector<int>> perm(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    perm[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(l_at(j + 1)));
    std::iota(perm[static_cast<std::size_t>(j)].begin(),
              perm[static_cast<std::size_t>(j)].end(), 0);
  }
  // coordinate at 1-based (level c, slot idx) under the current permutations
  auto coord = [&](int c, int idx) -> const Rational& {
    return t.exact[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(
        perm[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(idx) - 1])];
  };
  Rational total(0);
  while (true) {
    Rational denom(1);
    for (int j = 1; j <= r; ++j) {
      for (int i = 1; i <= l_at(j) - l_at(j + 1); ++i) {
        for (int c = 1; c <= j; ++c) {
          const int idx = i + l_at(c) - l_at(j);
          Rational factor;
          if (c == 1) {
            factor = coord(1, idx) - Rational(1);
            if (factor == Rational(0))
              raise(ErrorCode::CoordinateAtSingularPoint,
                    "level-one coordinate at the marked point 1");
          } else {
            factor = coord(c, idx) - coord(c - 1, i + l_at(c - 1) - l_at(j));
            if (factor == Rational(0))
              raise(ErrorCode::CoincidingCoordinates,
                    "coordinates on adjacent levels coincide");
          }
          denom *= factor;
        }
      }
    }
    total += Rational(1) / denom;
    // odometer step over the per-level permutations
    int level = 0;
    while (level < r &&
           !std::next_permutation(perm[static_cast<std::size_t>(level)].begin(),
                                  perm[static_cast<std::size_t>(level)].end()))
      ++level;
    if (level == r) break;
  }
  Rational prefactor(1);
  for (int j = 1; j <= r; ++j)
    for (int i = 2; i <= l_at(j) - l_at(j + 1); ++i) prefactor *= Rational(i);
  return total / prefactor;
}

Rational counterexample_condition(const Rational& m1, const Rational& m2,
                                  const Rational& k) {
  const Rational a = Rational(2) * m1 + m2;
  return a * a + k * (Rational(4) * m1 - m2 * m2);
}

std::vector<std::array<long, 3>> scan_counterexamples(long m1_max, long m2_max,
                                                      long k_max) {
  if (m1_max < 1 || m2_max < 1 || k_max < 1)
    raise(ErrorCode::InvalidInput, "scan bounds must be at least 1");
  const long rows = m1_max * m2_max;
  std::vector<std::vector<std::array<long, 3>>> buckets(
      static_cast<std::size_t>(rows));
  parallel_for(rows, [&](long row) {
    const long m1 = row / m2_max + 1;
    const long m2 = row % m2_max + 1;
    for (long k = 0; k <= k_max; ++k) {
      if (counterexample_condition(Rational(m1), Rational(m2), Rational(k)) !=
          Rational(0))
        continue;
      const Params pr = Params::make({Rational(m1), Rational(m2)}, {2, 1}, Rational(k));
      if (!is_consistent(pr)) continue;
      const YTuple yt = y_tuple(pr);
      if (yt.ys[0] == yt.ys[1] * yt.ys[1])
        buckets[static_cast<std::size_t>(row)].push_back({m1, m2, k});
    }
  });
  std::vector<std::array<long, 3>> out;
  for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bp
