#pragma once

#include <vector>

#include "psalg/rational.hpp"

namespace psalg {

// Dense exact-rational matrix utilities for the small linear systems that
// come up in the span checks and the rank-1 classifier.
using RatMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && sgn(m[sel][col]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

// Solves A x = b; returns one solution if consistent.
inline bool solve_linear(const RatMatrix& A, const std::vector<Rational>& b,
                         std::vector<Rational>& x) {
  if (A.empty()) {
    for (const auto& v : b)
      if (sgn(v) != 0) return false;
    x.clear();
    return true;
  }
  size_t rows = A.size(), cols = A[0].size();
  RatMatrix aug(rows, std::vector<Rational>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) aug[r][c] = A[r][c];
    aug[r][cols] = b[r];
  }
  std::vector<int> pivots = rref(aug);
  x.assign(cols, 0);
  for (size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == static_cast<int>(cols)) return false;  // 0 = 1 row
    x[pivots[p]] = aug[p][cols];
  }
  // verify (free variables are set to zero)
  for (size_t r = 0; r < rows; ++r) {
    Rational acc = 0;
    for (size_t c = 0; c < cols; ++c) acc += A[r][c] * x[c];
    if (acc != b[r]) return false;
  }
  return true;
}

}  // namespace psalg
