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

#include "vertexlab/detectors.hpp"

#include <string>
#include <utility>

#include "vertexlab/error.hpp"

namespace vertexlab {

Conic::Conic(Matrix symmetric) : q_(std::move(symmetric)) {
  if (q_.size() != 3) throw GeometryError(ErrorCode::DimensionMismatch, "conic must be 3x3");
  bool nonzero = false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (q_[i].size() != 3) throw GeometryError(ErrorCode::DimensionMismatch, "conic must be 3x3");
    for (std::size_t j = 0; j < 3; ++j) {
      if (sgn(q_[i][j]) != 0) nonzero = true;
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (q_[i][j] != q_[j][i]) {
        throw GeometryError(ErrorCode::DegenerateInput, "conic matrix must be symmetric");
      }
    }
  }
  if (!nonzero) throw GeometryError(ErrorCode::ZeroVector, "zero conic");
}

Conic Conic::from_coefficients(const Vec& c) {
  if (c.size() != 6) throw GeometryError(ErrorCode::DimensionMismatch, "six coefficients");
  const Scalar half(1, 2);
  return Conic(Matrix{{c[0], c[3] * half, c[5] * half},
                      {c[3] * half, c[1], c[4] * half},
                      {c[5] * half, c[4] * half, c[2]}});
}

Vec Conic::coefficients() const {
  return Vec{q_[0][0], q_[1][1], q_[2][2], 2 * q_[0][1], 2 * q_[1][2], 2 * q_[0][2]};
}

Scalar Conic::evaluate(const Vec& v) const {
  if (v.size() != 3) throw GeometryError(ErrorCode::DimensionMismatch, "conic needs RP^2 points");
  return dot(v, multiply(q_, v));
}

int Conic::side_product(const Vec& p, const Vec& q) const {
  return sgn(evaluate(p)) * sgn(evaluate(q));
}

bool operator==(const Conic& a, const Conic& b) {
  return HPoint(a.coefficients()) == HPoint(b.coefficients());
}

int side_of_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
  const int orient = sgn(orientation(a, b, c));
  if (orient == 0) {
    throw GeometryError(ErrorCode::CollinearCircle, "circle through collinear points");
  }
  auto row = [](const Point2& q) {
    return Vec{q.x, q.y, q.x * q.x + q.y * q.y, Scalar(1)};
  };
  return sgn(determinant(Matrix{row(a), row(b), row(c), row(p)})) * orient;
}

DetectorReport extremal_triples(const PlanarConvexPolygon& polygon) {
  DetectorReport out;
  const long n = static_cast<long>(polygon.size());
  for (long i = 0; i < n; ++i) {
    const auto& a = polygon.vertex(i);
    const auto& b = polygon.vertex(i + 1);
    const auto& c = polygon.vertex(i + 2);
    const int before = side_of_circle(a, b, c, polygon.vertex(i - 1));
    const int after = side_of_circle(a, b, c, polygon.vertex(i + 3));
    if (before * after >= 0) out.positions.push_back(static_cast<std::size_t>(i));
    if (before == 0 || after == 0) out.boundary_hits.push_back(static_cast<std::size_t>(i));
  }
  out.count = out.positions.size();
  return out;
}

Conic conic_through(std::span<const Vec> points) {
  Matrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != 3) {
      throw GeometryError(ErrorCode::DimensionMismatch, "conic points must lie in RP^2");
    }
    const auto& x = p[0];
    const auto& y = p[1];
    const auto& z = p[2];
    rows.push_back(Vec{x * x, y * y, z * z, x * y, y * z, z * x});
  }
  const auto basis = nullspace_basis(rows, 6);
  if (basis.size() != 1) {
    throw GeometryError(ErrorCode::DegenerateConfiguration,
                        "points determine a " + std::to_string(basis.size()) +
                            "-dimensional family of conics");
  }
  return Conic::from_coefficients(basis.front());
}

DetectorReport extremal_quintuples(const PlanarConvexPolygon& polygon) {
  if (polygon.size() < 6) {
    throw GeometryError(ErrorCode::TooFewVertices, "extremal quintuples need n >= 6");
  }
  DetectorReport out;
  const long n = static_cast<long>(polygon.size());
  for (long i = 0; i < n; ++i) {
    std::vector<Vec> five;
    for (long k = 0; k < 5; ++k) five.push_back(polygon.lift(i + k));
    const Conic q = conic_through(five);
    const int before = sgn(q.evaluate(polygon.lift(i - 1)));
    const int after = sgn(q.evaluate(polygon.lift(i + 5)));
    if (before * after >= 0) out.positions.push_back(static_cast<std::size_t>(i));
    if (before == 0 || after == 0) out.boundary_hits.push_back(static_cast<std::size_t>(i));
  }
  out.count = out.positions.size();
  return out;
}

std::vector<Scalar> cross_ratio_diffs(const PairTuples& tuples) {
  const long n = static_cast<long>(tuples.size());
  std::vector<Scalar> diffs;
  diffs.reserve(tuples.size());
  for (long j = 0; j < n; ++j) {
    const Scalar cy = cross_ratio(tuples.y(j), tuples.y(j + 1), tuples.y(j + 2), tuples.y(j + 3));
    const Scalar cx = cross_ratio(tuples.x(j), tuples.x(j + 1), tuples.x(j + 2), tuples.x(j + 3));
    diffs.push_back(cy - cx);
  }
  return diffs;
}

DetectorReport ghys_extremal_triples(const PairTuples& tuples) {
  const auto diffs = cross_ratio_diffs(tuples);
  const std::size_t n = diffs.size();
  DetectorReport out;
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = sgn(diffs[(i + n - 1) % n]);
    const int cur = sgn(diffs[i]);
    if (prev * cur <= 0) out.positions.push_back(i);
    if (prev == 0 || cur == 0) out.boundary_hits.push_back(i);
  }
  out.count = out.positions.size();
  return out;
}

std::vector<Scalar> flattening_determinants(const LiftedPolygon& polygon) {
  const long n = static_cast<long>(polygon.size());
  std::vector<Scalar> dets;
  dets.reserve(polygon.size());
  for (long j = 0; j < n; ++j) {
    const auto w = polygon.window(j, polygon.dim() + 1);
    dets.push_back(det(std::span<const Vec>(w)));
  }
  return dets;
}

DetectorReport flattenings_det(const LiftedPolygon& polygon) {
  const auto dets = flattening_determinants(polygon);
  const std::size_t n = dets.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(dets[j]) == 0) {
      throw GeometryError(ErrorCode::DegenerateFlattening,
                          "vanishing determinant at window " + std::to_string(j));
    }
  }
  // Delta_{j+n} = wrap^{d+1} Delta_j.
  const int shift = (polygon.dim() % 2 == 0) ? polygon.wrap() : 1;
  DetectorReport out;
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = i == 0 ? shift * sgn(dets[n - 1]) : sgn(dets[i - 1]);
    if (prev * sgn(dets[i]) < 0) out.positions.push_back(i);
  }
  out.count = out.positions.size();
  return out;
}

DetectorReport flattenings_sep(const LiftedPolygon& polygon) {
  const std::size_t d = polygon.dim();
  const long n = static_cast<long>(polygon.size());
  DetectorReport out;
  for (long i = 0; i < n; ++i) {
    const auto through = polygon.window(i, d);
    const auto basis = nullspace_basis(Matrix(through.begin(), through.end()), d + 1);
    if (basis.size() != 1) {
      throw GeometryError(ErrorCode::DegenerateIndices,
                          "vertices " + std::to_string(i) + ".. do not span a hyperplane");
    }
    const Hyperplane h(basis.front());
    const bool sep = separated(chain_of(polygon, i - 1, d + 2), h);
    const bool flat = (d % 2 == 0) ? sep : !sep;
    if (flat) out.positions.push_back(static_cast<std::size_t>(i));
  }
  out.count = out.positions.size();
  return out;
}

}  // namespace vertexlab
