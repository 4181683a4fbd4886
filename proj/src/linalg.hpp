#pragma once

// Small dense linear algebra over Q.

#include <vector>

#include "icis/polynomial.hpp"

namespace icis::linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Row echelon form in place; returns the pivot column of each nonzero row.
inline std::vector<int> row_reduce(Matrix& a) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Matrix a) { return static_cast<int>(row_reduce(a).size()); }

inline Rational determinant(Matrix a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Basis of the right kernel {v : a v = 0}.
inline std::vector<std::vector<Rational>> kernel(Matrix a, int cols) {
  std::vector<int> piv = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace icis::linalg
