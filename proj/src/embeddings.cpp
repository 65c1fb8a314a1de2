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

#include "vertexlab/embeddings.hpp"

#include <set>
#include <utility>

#include "vertexlab/error.hpp"

namespace vertexlab {

namespace {

// Full check while the number of (d+1)-subsets stays small, otherwise a
// window of 2(d+1) consecutive vertices.
GeneralPosition image_check_mode(std::size_t n, std::size_t dim) {
  constexpr std::size_t kFullBudget = 4000;
  std::size_t subsets = 1;
  const std::size_t k = dim + 1;
  for (std::size_t i = 0; i < k && n >= k; ++i) {
    subsets = subsets * (n - i) / (i + 1);
    if (subsets > kFullBudget) return GeneralPosition::windowed(2 * k);
  }
  return GeneralPosition::full();
}

LiftedPolygon checked(std::size_t dim, std::vector<Vec> lifts) {
  LiftedPolygon p(dim, std::move(lifts), 1);
  if (!p.in_general_position(image_check_mode(p.size(), dim))) {
    throw GeometryError(ErrorCode::NotGeneric,
                        "image polygon is not in general position; perturb the source");
  }
  return p;
}

Vec cross(const Vec& a, const Vec& b) {
  return Vec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Matrix frame(const std::array<Vec, 3>& pts) {
  for (const auto& p : pts) {
    if (p.size() != 2) throw GeometryError(ErrorCode::DimensionMismatch, "RP^1 points");
  }
  // alpha * p0 + beta * p1 = p2
  const Matrix cols{{pts[0][0], pts[1][0]}, {pts[0][1], pts[1][1]}};
  if (sgn(bracket(pts[0], pts[1])) == 0) {
    throw GeometryError(ErrorCode::DegenerateTriple, "first two points coincide");
  }
  const Vec ab = solve(cols, pts[2]);
  if (sgn(ab[0]) == 0 || sgn(ab[1]) == 0) {
    throw GeometryError(ErrorCode::DegenerateTriple, "third point coincides with another");
  }
  return Matrix{{ab[0] * pts[0][0], ab[1] * pts[1][0]}, {ab[0] * pts[0][1], ab[1] * pts[1][1]}};
}

}  // namespace

std::size_t target_dim(EmbeddingKind kind) {
  return kind == EmbeddingKind::Veronese5 ? 5 : 3;
}

Vec embed_point(EmbeddingKind kind, const Vec& p) {
  if (kind == EmbeddingKind::Segre) {
    throw GeometryError(ErrorCode::DimensionMismatch, "the Segre map takes two points");
  }
  if (p.size() != 3) throw GeometryError(ErrorCode::DimensionMismatch, "Veronese maps take RP^2 points");
  const auto& x = p[0];
  const auto& y = p[1];
  const auto& z = p[2];
  if (kind == EmbeddingKind::Veronese5) {
    return Vec{x * x, y * y, z * z, x * y, y * z, z * x};
  }
  return Vec{x * x + y * y, z * z, y * z, z * x};
}

Vec embed_point(EmbeddingKind kind, const Vec& p, const Vec& q) {
  if (kind != EmbeddingKind::Segre) {
    throw GeometryError(ErrorCode::DimensionMismatch, "Veronese maps take one point");
  }
  if (p.size() != 2 || q.size() != 2) {
    throw GeometryError(ErrorCode::DimensionMismatch, "the Segre map takes RP^1 points");
  }
  return Vec{p[0] * q[0], p[0] * q[1], p[1] * q[0], p[1] * q[1]};
}

LiftedPolygon image_polygon(EmbeddingKind kind, const PlanarConvexPolygon& source) {
  std::vector<Vec> lifts;
  lifts.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    lifts.push_back(embed_point(kind, source.lift(static_cast<long>(i))));
  }
  if (lifts.size() < target_dim(kind) + 1) {
    throw GeometryError(ErrorCode::TooFewVertices, "source has too few vertices for the target");
  }
  return checked(target_dim(kind), std::move(lifts));
}

LiftedPolygon image_polygon(const PairTuples& source) {
  std::vector<Vec> lifts;
  lifts.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const long j = static_cast<long>(i);
    lifts.push_back(embed_point(EmbeddingKind::Segre, source.x(j), source.y(j)));
  }
  return checked(3, std::move(lifts));
}

Hyperplane conic_to_hyperplane(const Conic& q) { return Hyperplane(q.coefficients()); }

Hyperplane witness_hyperplane(const PlanarConvexPolygon& polygon,
                              const std::array<std::size_t, 4>& indices) {
  std::set<std::size_t> distinct(indices.begin(), indices.end());
  if (distinct.size() != 4 || *distinct.rbegin() >= polygon.size()) {
    throw GeometryError(ErrorCode::DegenerateIndices, "four distinct vertex indices required");
  }
  auto at = [&](std::size_t k) { return polygon.lift(static_cast<long>(indices[k])); };
  const Vec l1 = cross(at(0), at(1));
  const Vec l2 = cross(at(2), at(3));
  Matrix q(3, Vec(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) q[i][j] = (l1[i] * l2[j] + l2[i] * l1[j]) / 2;
  }
  return conic_to_hyperplane(Conic(std::move(q)));
}

ProjMap mobius_through(const std::array<Vec, 3>& xs, const std::array<Vec, 3>& ys) {
  const Matrix a = frame(xs);
  const Matrix b = frame(ys);
  return ProjMap(multiply(b, inverse(a)));
}

int graph_crossing_index(const PairTuples& tuples, std::size_t i) {
  const long c = static_cast<long>(i);
  const ProjMap m = mobius_through({tuples.x(c), tuples.x(c + 1), tuples.x(c + 2)},
                                   {tuples.y(c), tuples.y(c + 1), tuples.y(c + 2)});
  const ProjMap back = m.inverse();
  const Vec x_before = tuples.x(c - 1);
  const Vec x_after = tuples.x(c + 3);
  const Vec z_before = back.apply(tuples.y(c - 1));
  const Vec z_after = back.apply(tuples.y(c + 3));
  if (HPoint(z_before) == HPoint(x_before) || HPoint(z_after) == HPoint(x_after)) {
    throw GeometryError(ErrorCode::DegenerateOnGraph,
                        "an end vertex of the broken line lies on the graph");
  }
  // Angle gap (z - x) is positive at the start iff z_before falls inside the
  // arc from x_before to x_i, and positive at the end iff x_after falls
  // inside the arc from x_{i+2} to z_after; both gaps stay within a half-turn.
  const bool start_above = strictly_between(x_before, z_before, tuples.x(c));
  const bool end_above = strictly_between(tuples.x(c + 2), x_after, z_after);
  return (end_above ? 1 : 0) - (start_above ? 1 : 0);
}

}  // namespace vertexlab
