/**
 * @file weyl.cpp
 * @brief Symmetric-group action on parameters via generator words.
 */

#include "bp/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "bp/errors.hpp"

namespace bp {

WeylElement WeylElement::identity(int r) {
  if (r < 1) raise(ErrorCode::InvalidInput, "WeylElement rank must be >= 1");
  WeylElement w;
  w.images.resize(static_cast<std::size_t>(r) + 1);
  std::iota(w.images.begin(), w.images.end(), 0);
  return w;
}

WeylElement WeylElement::simple(int r, int i) {
  if (i < 1 || i > r) raise(ErrorCode::InvalidInput, "simple transposition index out of range");
  WeylElement w = identity(r);
  std::swap(w.images[static_cast<std::size_t>(i) - 1], w.images[static_cast<std::size_t>(i)]);
  return w;
}

WeylElement WeylElement::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 2) raise(ErrorCode::InvalidInput, "permutation needs at least two points");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      raise(ErrorCode::InvalidInput, "image list is not a permutation of 0..r");
    seen[static_cast<std::size_t>(v)] = true;
  }
  WeylElement w;
  w.images = std::move(images);
  return w;
}

int WeylElement::apply(int p) const {
  if (p < 0 || p > rank()) raise(ErrorCode::InvalidInput, "permutation argument out of range");
  return images[static_cast<std::size_t>(p)];
}

WeylElement WeylElement::inverse() const {
  WeylElement w = identity(rank());
  for (std::size_t p = 0; p < images.size(); ++p)
    w.images[static_cast<std::size_t>(images[p])] = static_cast<int>(p);
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (rank() != o.rank()) raise(ErrorCode::InvalidInput, "composing permutations of different ranks");
  WeylElement w = identity(rank());
  for (std::size_t p = 0; p < images.size(); ++p)
    w.images[p] = images[static_cast<std::size_t>(o.images[p])];
  return w;
}

bool WeylElement::is_identity() const {
  for (std::size_t p = 0; p < images.size(); ++p)
    if (images[p] != static_cast<int>(p)) return false;
  return true;
}

std::vector<int> WeylElement::word() const {
  // Peel descents off the right: if w has a descent at i (w(i-1) > w(i)),
  // then w = w' o s_i with w' = w o s_i having one inversion fewer.  The
  // indices are recorded in the order they are peeled, so acting with the
  // word applies the first recorded transposition first.
  std::vector<int> out;
  std::vector<int> v = images;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i - 1] > v[i]) {
        std::swap(v[i - 1], v[i]);
        out.push_back(static_cast<int>(i));
        progress = true;
        break;
      }
    }
  }
  return out;
}

std::vector<WeylElement> weyl_group(int r) {
  WeylElement w = WeylElement::identity(r);
  std::vector<WeylElement> out;
  std::vector<int> v = w.images;
  do {
    out.push_back(WeylElement::from_images(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

/// In-place s_i on m-coordinates (1-based index i into m_1..m_r).
void simple_act_m(int i, std::vector<Rational>& m) {
  const int r = static_cast<int>(m.size());
  const Rational mi = m[static_cast<std::size_t>(i) - 1];
  if (i - 1 >= 1) m[static_cast<std::size_t>(i) - 2] += mi + Rational(1);
  if (i + 1 <= r) m[static_cast<std::size_t>(i)] += mi + Rational(1);
  m[static_cast<std::size_t>(i) - 1] = -mi - Rational(2);
}

/// In-place (s_i)_k on l-coordinates, with the conventions l_0 = k, l_{r+1} = 0.
void simple_act_l(int i, std::vector<Rational>& l, const Rational& k) {
  const int r = static_cast<int>(l.size());
  const Rational left = (i == 1) ? k : l[static_cast<std::size_t>(i) - 2];
  const Rational right = (i == r) ? Rational(0) : l[static_cast<std::size_t>(i)];
  l[static_cast<std::size_t>(i) - 1] = left + right - l[static_cast<std::size_t>(i) - 1];
}

}  // namespace

std::vector<Rational> weyl_act_m(const WeylElement& w, const std::vector<Rational>& m) {
  if (w.rank() != static_cast<int>(m.size()))
    raise(ErrorCode::InvalidInput, "weyl_act_m: rank mismatch");
  std::vector<Rational> out = m;
  // Pullback composition: the last letter of the word acts first, so that
  // the flag differences of the companion action transform as d'_p = d_{w(p)}
  // and the generator-permutation identities hold with w itself.
  const std::vector<int> word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) simple_act_m(*it, out);
  return out;
}

std::vector<int> weyl_act_l(const WeylElement& w, const std::vector<int>& l, const Rational& k) {
  if (w.rank() != static_cast<int>(l.size()))
    raise(ErrorCode::InvalidInput, "weyl_act_l: rank mismatch");
  std::vector<Rational> work;
  work.reserve(l.size());
  for (int v : l) work.emplace_back(v);
  // Same pullback composition as weyl_act_m; on the difference vector
  // (k - l_1, l_1 - l_2, ..., l_r) this is the substitution d'_p = d_{w(p)}.
  const std::vector<int> word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) simple_act_l(*it, work, k);
  std::vector<int> out;
  out.reserve(work.size());
  for (const Rational& v : work) {
    if (!v.is_integer())
      raise(ErrorCode::InvalidInput, "weyl_act_l: transformed flag is not an integer");
    out.push_back(static_cast<int>(v.to_long()));
  }
  return out;
}

Params weyl_act(const WeylElement& w, const Params& p) {
  return Params::make(weyl_act_m(w, p.m), weyl_act_l(w, p.l, p.k), p.k);
}

}  // namespace bp
