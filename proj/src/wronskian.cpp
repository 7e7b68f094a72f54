#include "bp/wronskian.hpp"

#include <utility>

namespace bp {

Poly poly_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) raise(ErrorCode::InvalidInput, "determinant of non-square matrix");
  if (n == 0) return Poly::one();
  Poly prev = Poly::one();
  bool negate = false;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col].is_zero()) ++sel;
    if (sel == n) return Poly();
    if (sel != col) {
      std::swap(m[sel], m[col]);
      negate = !negate;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        Poly t = m[col][col] * m[i][j] - m[i][col] * m[col][j];
        // In the Bareiss scheme this division is exact; a remainder would
        // indicate a logic error, caught by exact_div.
        m[i][j] = Poly::exact_div(t, prev);
      }
      m[i][col] = Poly();
    }
    prev = m[col][col];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly wronskian(const std::vector<Poly>& fs) {
  const std::size_t n = fs.size();
  if (n == 0) return Poly::one();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  m[0] = fs;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i - 1][j].derivative();
  return poly_determinant(std::move(m));
}

}  // namespace bp
