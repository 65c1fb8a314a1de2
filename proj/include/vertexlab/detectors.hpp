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
#include <vector>

#include "vertexlab/incidence.hpp"
#include "vertexlab/polygon.hpp"
#include "vertexlab/projective.hpp"

namespace vertexlab {

// Symmetric 3x3 form, up to scale. Only sign products Q(p) Q(q) are
// meaningful, so no absolute side is exposed.
class Conic {
 public:
  explicit Conic(Matrix symmetric);
  // Coefficients of x^2, y^2, z^2, xy, yz, zx.
  static Conic from_coefficients(const Vec& c);

  const Matrix& matrix() const { return q_; }
  Vec coefficients() const;
  Scalar evaluate(const Vec& v) const;
  // sign(Q(p) * Q(q)).
  int side_product(const Vec& p, const Vec& q) const;

  friend bool operator==(const Conic& a, const Conic& b);

 private:
  Matrix q_;
};

// Positions are 0-based: position i stands for the tuple starting at vertex i.
struct DetectorReport {
  std::vector<std::size_t> positions;
  std::size_t count = 0;
  std::vector<std::size_t> boundary_hits;
  friend bool operator==(const DetectorReport&, const DetectorReport&) = default;
};

// +1 if p is inside the circle through a, b, c; -1 outside; 0 on it.
int side_of_circle(const Point2& a, const Point2& b, const Point2& c, const Point2& p);

DetectorReport extremal_triples(const PlanarConvexPolygon& polygon);

Conic conic_through(std::span<const Vec> points);
DetectorReport extremal_quintuples(const PlanarConvexPolygon& polygon);

// diffs[j] = [y_j, y_j+1, y_j+2, y_j+3] - [x_j, ..., x_j+3], cyclically.
std::vector<Scalar> cross_ratio_diffs(const PairTuples& tuples);
DetectorReport ghys_extremal_triples(const PairTuples& tuples);

// Delta_j = |lift(j), ..., lift(j+d)| for j = 0..n-1.
std::vector<Scalar> flattening_determinants(const LiftedPolygon& polygon);
DetectorReport flattenings_det(const LiftedPolygon& polygon);
DetectorReport flattenings_sep(const LiftedPolygon& polygon);

}  // namespace vertexlab
