#pragma once

#include <cstddef>
#include <vector>

#include "blackwell/rational.hpp"

namespace blackwell {

// Row-reduce in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rational_rank(RationalMatrix m) { return rref(m).size(); }

struct LinearSolveResult {
  bool consistent = false;
  RationalVector particular;           // one solution when consistent
  std::vector<RationalVector> kernel;  // basis of the homogeneous solution space
  bool unique() const { return consistent && kernel.empty(); }
};

// Solve A x = b exactly. A is rows x n, b has length rows.
inline LinearSolveResult solve_linear(const RationalMatrix& a, const RationalVector& b) {
  LinearSolveResult res;
  const std::size_t rows = a.size();
  const std::size_t n = rows == 0 ? 0 : a[0].size();
  BW_ASSERT(b.size() == rows, "solve_linear: rhs length mismatch");
  RationalMatrix aug(rows, RationalVector(n + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  auto pivots = rref(aug);
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    if (pivots[p] == n) return res;  // 0 = 1 row: inconsistent
  }
  res.consistent = true;
  res.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    is_pivot[pivots[p]] = true;
    res.particular[pivots[p]] = aug[p][n];
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RationalVector dir(n, Rational(0));
    dir[c] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) dir[pivots[p]] = -aug[p][c];
    res.kernel.push_back(std::move(dir));
  }
  return res;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  BW_ASSERT(a.size() == b.size(), "dot: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace blackwell
