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

#include "vertexlab/projective.hpp"

#include <algorithm>
#include <utility>

#include "vertexlab/error.hpp"

namespace vertexlab {

namespace {

Vec canonical_coords(const Vec& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  int lead = 0;
  for (const auto& z : ints) {
    if (sgn(z) != 0) {
      lead = sgn(z);
      break;
    }
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(ints[i] / g * lead);
  return out;
}

bool proportional(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

std::string join_coords(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ":";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace

HPoint::HPoint(Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw GeometryError(ErrorCode::DimensionMismatch,
                        "a projective point needs at least two coordinates");
  }
  if (is_zero(coords_)) {
    throw GeometryError(ErrorCode::ZeroVector, "zero homogeneous coordinates");
  }
}

HPoint HPoint::canonical() const { return HPoint(canonical_coords(coords_)); }

std::string HPoint::to_string() const { return join_coords(canonical().coords_); }

bool operator==(const HPoint& a, const HPoint& b) {
  return proportional(a.coords_, b.coords_);
}

Hyperplane::Hyperplane(Vec covector) : covector_(std::move(covector)) {
  if (covector_.size() < 2) {
    throw GeometryError(ErrorCode::DimensionMismatch,
                        "a hyperplane needs at least two coefficients");
  }
  if (is_zero(covector_)) {
    throw GeometryError(ErrorCode::ZeroVector, "zero covector");
  }
}

Scalar Hyperplane::evaluate(const Vec& v) const {
  if (v.size() != covector_.size()) {
    throw GeometryError(ErrorCode::DimensionMismatch,
                        "hyperplane and point dimensions differ");
  }
  return dot(covector_, v);
}

Hyperplane Hyperplane::canonical() const {
  return Hyperplane(canonical_coords(covector_));
}

std::string Hyperplane::to_string() const {
  return join_coords(canonical().covector_);
}

bool operator==(const Hyperplane& a, const Hyperplane& b) {
  return proportional(a.covector_, b.covector_);
}

ProjMap::ProjMap(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.size() < 2) {
    throw GeometryError(ErrorCode::DimensionMismatch, "map too small");
  }
  if (sgn(determinant(matrix_)) == 0) {
    throw GeometryError(ErrorCode::SingularMap, "projective map must be invertible");
  }
}

ProjMap ProjMap::identity(std::size_t dim) {
  return ProjMap(identity_matrix(dim + 1));
}

Vec ProjMap::apply(const Vec& v) const {
  if (v.size() != matrix_.size()) {
    throw GeometryError(ErrorCode::DimensionMismatch, "map and point dimensions differ");
  }
  return multiply(matrix_, v);
}

ProjMap ProjMap::inverse() const { return ProjMap(vertexlab::inverse(matrix_)); }

ProjMap ProjMap::then(const ProjMap& next) const {
  return ProjMap(multiply(next.matrix_, matrix_));
}

HPoint apply_map(const ProjMap& m, const HPoint& p) { return HPoint(m.apply(p.coords())); }

Scalar det(std::span<const Vec> vectors) {
  const std::size_t n = vectors.size();
  for (const auto& v : vectors) {
    if (v.size() != n) {
      throw GeometryError(ErrorCode::DimensionMismatch,
                          "det needs d+1 vectors of dimension d+1");
    }
  }
  return determinant(vectors);
}

Scalar det(std::span<const HPoint> points) {
  Matrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(p.coords());
  return det(std::span<const Vec>(rows));
}

Scalar bracket(const Vec& x, const Vec& y) {
  if (x.size() != 2 || y.size() != 2) {
    throw GeometryError(ErrorCode::DimensionMismatch, "bracket needs RP^1 points");
  }
  return x[0] * y[1] - x[1] * y[0];
}

Scalar cross_ratio(const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  const Scalar ba = bracket(b, a);
  const Scalar dc = bracket(d, c);
  if (sgn(ba) == 0 || sgn(dc) == 0) {
    throw GeometryError(ErrorCode::DegenerateInput,
                        "cross-ratio with coincident points (a,b) or (c,d)");
  }
  return bracket(c, a) * bracket(d, b) / (ba * dc);
}

Scalar cross_ratio(const HPoint& a, const HPoint& b, const HPoint& c,
                   const HPoint& d) {
  return cross_ratio(a.coords(), b.coords(), c.coords(), d.coords());
}

Scalar cyclic_shift_cross_ratio(const Scalar& t) {
  if (t == 1) {
    throw GeometryError(ErrorCode::DegenerateInput, "cross-ratio equal to 1");
  }
  return t / (t - 1);
}

bool is_general_position(std::span<const Vec> points, std::size_t dim,
                         GeneralPosition mode) {
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.size() != dim + 1) {
      throw GeometryError(ErrorCode::DimensionMismatch, "point dimension");
    }
  }
  if (n <= dim + 1) return rank(Matrix(points.begin(), points.end())) == n;

  const std::size_t k = dim + 1;
  bool ok = true;
  auto check = [&](const std::vector<std::size_t>& idx, std::size_t offset) {
    Matrix m;
    m.reserve(k);
    for (auto i : idx) m.push_back(points[(i + offset) % n]);
    if (sgn(determinant(std::move(m))) == 0) ok = false;
    return ok;
  };

  if (mode.kind() == GeneralPosition::Kind::Full || mode.window() >= n) {
    for_each_subset(n, k, [&](const auto& idx) { return check(idx, 0); });
    return ok;
  }
  const std::size_t window = std::max(mode.window(), k);
  for (std::size_t start = 0; start < n && ok; ++start) {
    // Subsets containing the window's first point; together over all starts
    // this covers every subset that fits in some window.
    for_each_subset(window - 1, k - 1, [&](const auto& rest) {
      std::vector<std::size_t> idx{0};
      for (auto r : rest) idx.push_back(r + 1);
      return check(idx, start);
    });
  }
  return ok;
}

bool is_general_position(std::span<const HPoint> points, std::size_t dim,
                         GeneralPosition mode) {
  std::vector<Vec> reps;
  reps.reserve(points.size());
  for (const auto& p : points) reps.push_back(p.coords());
  return is_general_position(std::span<const Vec>(reps), dim, mode);
}

}  // namespace vertexlab
