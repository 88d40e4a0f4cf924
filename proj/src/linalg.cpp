#include "ktype/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ktype {

std::optional<RatVector> solve_rational(const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_rational: dimension mismatch");
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<RatVector> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("solve_rational: ragged matrix");
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == Rational(0)) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rational(0)) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != Rational(0)) return std::nullopt;
  RatVector x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<Coord>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m, std::size_t cols_if_empty) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : cols_if_empty;
  IntMatrix t(cols, std::vector<Coord>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<Coord> apply(const IntMatrix& m, const std::vector<Coord>& v) {
  std::vector<Coord> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t p = k ? b.front().size() : 0;
  IntMatrix c(n, std::vector<Coord>(p, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("matrix product dimension mismatch");
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
  }
  return c;
}

Coord determinant(const IntMatrix& m0) {
  const std::size_t n = m0.size();
  if (n == 0) return 1;
  IntMatrix m = m0;
  Coord sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational frac(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  Rational f = r - Rational(q);
  if (f < Rational(0)) f += Rational(1);
  return f;
}

}  // namespace ktype
