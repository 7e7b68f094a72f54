#include "bp/linalg.hpp"

#include <algorithm>

namespace bp {

namespace {

/// Forward elimination in place; returns pivot columns.  rhs may be null.
std::vector<std::size_t> eliminate(Matrix& m, std::vector<Rational>* rhs) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    if (rhs) std::swap((*rhs)[sel], (*rhs)[row]);
    const Rational inv = m[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(Matrix m) {
  return static_cast<int>(eliminate(m, nullptr).size());
}

std::optional<std::vector<Rational>> solve_linear(Matrix m, std::vector<Rational> rhs) {
  if (m.size() != rhs.size())
    raise(ErrorCode::InvalidInput, "linear system with mismatched row counts");
  if (m.empty()) return std::vector<Rational>{};
  const std::size_t cols = m[0].size();
  const auto pivots = eliminate(m, &rhs);
  for (std::size_t i = pivots.size(); i < m.size(); ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
  return x;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) raise(ErrorCode::InvalidInput, "determinant of non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col].is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      const Rational f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<std::vector<Rational>> coordinates_in_span(const std::vector<Poly>& family,
                                                         const Poly& target) {
  int maxdeg = target.degree();
  for (const auto& p : family) maxdeg = std::max(maxdeg, p.degree());
  const std::size_t rows = static_cast<std::size_t>(maxdeg + 1);
  Matrix m(rows, std::vector<Rational>(family.size(), Rational(0)));
  std::vector<Rational> rhs(rows, Rational(0));
  for (std::size_t j = 0; j < family.size(); ++j)
    for (int i = 0; i <= family[j].degree(); ++i)
      m[static_cast<std::size_t>(i)][j] = family[j].coeff(i);
  for (int i = 0; i <= target.degree(); ++i) rhs[static_cast<std::size_t>(i)] = target.coeff(i);
  return solve_linear(std::move(m), std::move(rhs));
}

int span_dimension(const std::vector<Poly>& family) {
  int maxdeg = -1;
  for (const auto& p : family) maxdeg = std::max(maxdeg, p.degree());
  if (maxdeg < 0) return 0;
  Matrix m;
  for (const auto& p : family) {
    if (p.is_zero()) continue;
    std::vector<Rational> row(static_cast<std::size_t>(maxdeg + 1), Rational(0));
    for (int i = 0; i <= p.degree(); ++i) row[static_cast<std::size_t>(i)] = p.coeff(i);
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

std::vector<Poly> echelon_basis(std::vector<Poly> family) {
  std::vector<Poly> basis;  // kept with pairwise distinct degrees
  for (auto& p : family) {
    // Reduce the newcomer's leading term against the set until it drops out
    // or lands on a fresh degree.
    for (;;) {
      if (p.is_zero()) break;
      auto hit = std::find_if(basis.begin(), basis.end(),
                              [&](const Poly& b) { return b.degree() == p.degree(); });
      if (hit == basis.end()) {
        basis.push_back(p.monic());
        break;
      }
      p -= p.leading() * *hit;
    }
  }
  std::sort(basis.begin(), basis.end(),
            [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  // Back-substitute so every element has coefficient zero at the other
  // elements' degrees.
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Rational c = basis[j].coeff(basis[i].degree());
      if (!c.is_zero()) basis[j] -= c * basis[i];
    }
  return basis;
}

}  // namespace bp
