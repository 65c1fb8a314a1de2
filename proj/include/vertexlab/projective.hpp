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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vertexlab/linalg.hpp"
#include "vertexlab/scalar.hpp"

namespace vertexlab {

// A point of RP^d: a nonzero vector of d+1 coordinates, compared up to
// nonzero scale.
class HPoint {
 public:
  explicit HPoint(Vec coords);

  std::size_t dim() const { return coords_.size() - 1; }
  const Vec& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  // Coprime integer coordinates with the first nonzero coordinate positive.
  HPoint canonical() const;
  std::string to_string() const;

  friend bool operator==(const HPoint& a, const HPoint& b);

 private:
  Vec coords_;
};

// A hyperplane of RP^d as a nonzero covector, up to scale.
class Hyperplane {
 public:
  explicit Hyperplane(Vec covector);

  std::size_t dim() const { return covector_.size() - 1; }
  const Vec& covector() const { return covector_; }

  Scalar evaluate(const Vec& v) const;
  Scalar evaluate(const HPoint& p) const { return evaluate(p.coords()); }
  int side(const Vec& v) const { return sgn(evaluate(v)); }

  Hyperplane canonical() const;
  std::string to_string() const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b);

 private:
  Vec covector_;
};

// Invertible linear map of R^{d+1}, acting on RP^d.
class ProjMap {
 public:
  explicit ProjMap(Matrix matrix);

  static ProjMap identity(std::size_t dim);

  std::size_t dim() const { return matrix_.size() - 1; }
  const Matrix& matrix() const { return matrix_; }

  Vec apply(const Vec& v) const;
  ProjMap inverse() const;
  ProjMap then(const ProjMap& next) const;

 private:
  Matrix matrix_;
};

HPoint apply_map(const ProjMap& m, const HPoint& p);

// Determinant of d+1 representatives of dimension d+1.
Scalar det(std::span<const Vec> vectors);
Scalar det(std::span<const HPoint> points);

// |x y| = x0 y1 - x1 y0 for representatives of points of RP^1. For affine
// representatives (a:1), (b:1) this is a - b.
Scalar bracket(const Vec& x, const Vec& y);

// [a,b,c,d] = |c a| |d b| / (|b a| |d c|); in the affine chart this is
// (c-a)(d-b) / ((b-a)(d-c)). Throws DegenerateInput when a denominator
// bracket vanishes.
Scalar cross_ratio(const HPoint& a, const HPoint& b, const HPoint& c,
                   const HPoint& d);
Scalar cross_ratio(const Vec& a, const Vec& b, const Vec& c, const Vec& d);

// Value of [x4,x1,x2,x3] given t = [x1,x2,x3,x4].
Scalar cyclic_shift_cross_ratio(const Scalar& t);

class GeneralPosition {
 public:
  enum class Kind { Full, Windowed };

  static GeneralPosition full() { return GeneralPosition(Kind::Full, 0); }
  // Only (d+1)-subsets contained in a cyclic window of `window` consecutive
  // points are tested. Weaker than full(); intended for large n.
  static GeneralPosition windowed(std::size_t window) {
    return GeneralPosition(Kind::Windowed, window);
  }

  Kind kind() const { return kind_; }
  std::size_t window() const { return window_; }

 private:
  GeneralPosition(Kind k, std::size_t w) : kind_(k), window_(w) {}
  Kind kind_;
  std::size_t window_;
};

// Every subset of at most d+1 of the points spans a flat of the expected
// dimension.
bool is_general_position(std::span<const Vec> points, std::size_t dim,
                         GeneralPosition mode = GeneralPosition::full());
bool is_general_position(std::span<const HPoint> points, std::size_t dim,
                         GeneralPosition mode = GeneralPosition::full());

// Calls `visit` on every k-subset of {0..n-1} in lexicographic order; stops
// early when `visit` returns false.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace vertexlab
