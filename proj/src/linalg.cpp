// Copyright 2026 The VertexLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vertexlab/linalg.hpp"

#include <utility>

#include "vertexlab/error.hpp"

namespace vertexlab {

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw GeometryError(ErrorCode::DimensionMismatch, "dot: length mismatch");
  }
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vec scaled(const Vec& v, const Scalar& s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw GeometryError(ErrorCode::DimensionMismatch, "add: length mismatch");
  }
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw GeometryError(ErrorCode::DimensionMismatch,
                          "determinant of a non-square matrix");
    }
  }
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const Scalar& p = m[col][col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Scalar factor = m[r][col] / p;
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= factor * m[col][c];
      m[r][col] = 0;
    }
  }
  return det;
}

Scalar determinant(std::span<const Vec> vectors) {
  return determinant(Matrix(vectors.begin(), vectors.end()));
}

namespace {

// Reduced row echelon form in place, pivoting only on the first `cols`
// columns; row operations act on whole rows so augmented columns follow.
// Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const std::size_t width = m[row].size();
    const Scalar inv = 1 / m[row][col];
    for (std::size_t c = col; c < width; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Scalar factor = m[r][col];
      for (std::size_t c = col; c < width; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw GeometryError(ErrorCode::DimensionMismatch, "rank: ragged matrix");
    }
  }
  return rref(rows, cols).size();
}

std::vector<Vec> nullspace_basis(const Matrix& rows, std::size_t cols) {
  Matrix m = rows;
  for (const auto& r : m) {
    if (r.size() != cols) {
      throw GeometryError(ErrorCode::DimensionMismatch,
                          "nullspace_basis: row length differs from column count");
    }
  }
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec solve(Matrix a, Vec b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    throw GeometryError(ErrorCode::DimensionMismatch, "solve: rhs length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) {
      throw GeometryError(ErrorCode::DimensionMismatch, "solve: non-square");
    }
    a[i].push_back(b[i]);
  }
  const auto pivots = rref(a, n);
  if (pivots.size() != n) {
    throw GeometryError(ErrorCode::SingularMap, "solve: singular system");
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) {
      throw GeometryError(ErrorCode::DimensionMismatch, "inverse: non-square");
    }
    aug[i].resize(2 * n, Scalar(0));
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) {
    throw GeometryError(ErrorCode::SingularMap, "inverse: singular matrix");
  }
  Matrix out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) {
    throw GeometryError(ErrorCode::DimensionMismatch, "multiply: shapes");
  }
  const std::size_t cols = b.front().size();
  Matrix out(a.size(), Vec(cols, Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Vec multiply(const Matrix& a, const Vec& v) {
  Vec out(a.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
  return out;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, Vec(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace vertexlab
