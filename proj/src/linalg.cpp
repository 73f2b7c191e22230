#include "takiff/linalg.hpp"

#include <utility>

namespace takiff::linalg {

std::size_t rref(QMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const Rational inv = Rational(1) / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix aug(n, QVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  if (rref(aug) < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (aug[i][i] != Rational(1)) return std::nullopt;
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  QMatrix aug(rows, QVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  const std::size_t rank = rref(aug);
  QVector x(cols);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t lead = 0;
    while (lead <= cols && aug[r][lead].is_zero()) ++lead;
    if (lead == cols) return std::nullopt;  // inconsistent
    x[lead] = aug[r][cols];
  }
  if (rank < cols) return std::nullopt;  // dependent columns
  return x;
}

QMatrix to_rational(const IntMatrix& m) {
  QMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int v : m[i]) out[i].emplace_back(v);
  return out;
}

}  // namespace takiff::linalg
