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

#include "vertexlab/linalg.hpp"
#include "vertexlab/projective.hpp"
#include "vertexlab/scalar.hpp"

namespace vertexlab {

// A closed polygon in RP^d, stored as its lift to R^{d+1}.
//
// Vertex lifts are indexed cyclically with the wrap rule
// lift(j + n) = wrap * lift(j). Edges are the projections of the straight
// segments between consecutive lifts, so the lift together with the wrap factor
// determines every edge, including the closing one. wrap = +1 exactly when the
// polygon is contractible in RP^d.
class LiftedPolygon {
 public:
  LiftedPolygon(std::size_t dim, std::vector<Vec> lifts, int wrap);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return lifts_.size(); }
  int wrap() const { return wrap_; }
  bool contractible() const { return wrap_ == 1; }
  const std::vector<Vec>& lifts() const { return lifts_; }

  // Stored representative of vertex j mod n.
  const Vec& base(long j) const { return lifts_[index(j)]; }
  // Sign relating lift(j) to base(j): wrap^floor(j/n).
  int lift_sign(long j) const;
  Vec lift(long j) const;
  std::size_t index(long j) const;

  // Lifts j, j+1, ..., j+count-1 (wrap rule applied).
  std::vector<Vec> window(long j, std::size_t count) const;

  bool in_general_position(GeneralPosition mode = GeneralPosition::full()) const;

  LiftedPolygon rescaled(std::size_t vertex, const Scalar& factor) const;
  LiftedPolygon negated() const;
  LiftedPolygon mapped(const ProjMap& m) const;
  // Same vertices, opposite closing edge.
  LiftedPolygon reclosed() const;

  friend bool operator==(const LiftedPolygon&, const LiftedPolygon&) = default;

 private:
  std::size_t dim_;
  std::vector<Vec> lifts_;
  int wrap_;
};

struct Point2 {
  Scalar x;
  Scalar y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// Twice the signed area of (a, b, c); positive for a counterclockwise turn.
Scalar orientation(const Point2& a, const Point2& b, const Point2& c);

enum class OrientationPolicy { Reverse, Reject };

// Strictly convex plane polygon with counterclockwise vertex order.
class PlanarConvexPolygon {
 public:
  // Validates strict convex position. Clockwise input is reversed under
  // OrientationPolicy::Reverse and rejected as NonConvex under Reject.
  static PlanarConvexPolygon make(std::vector<Point2> vertices,
                                  OrientationPolicy policy = OrientationPolicy::Reverse);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& vertex(long j) const;
  // Homogeneous representative (x, y, 1).
  Vec lift(long j) const;

  friend bool operator==(const PlanarConvexPolygon&, const PlanarConvexPolygon&) = default;

 private:
  explicit PlanarConvexPolygon(std::vector<Point2> v) : vertices_(std::move(v)) {}
  std::vector<Point2> vertices_;
};

LiftedPolygon make_planar(const PlanarConvexPolygon& polygon);
LiftedPolygon make_planar(std::vector<Point2> vertices,
                          OrientationPolicy policy = OrientationPolicy::Reverse);

// Standard basis lifts e_1..e_{d+1} with wrap (-1)^{d+1}.
LiftedPolygon simplex(std::size_t dim);

// Vertices (1, t, t^2, ..., t^d) on the moment curve, wrap (-1)^{d+1}.
LiftedPolygon moment_polygon(std::size_t dim, std::span<const Scalar> parameters);

// Two cyclically ordered n-tuples of points of RP^1.
//
// Orientation convention: the positive direction of RP^1 is the direction of
// increasing affine coordinate x for points (x:1). Stored representatives
// satisfy |x(j+1) x(j)| > 0 for all j, sweep exactly one turn of RP^1, and
// anti-close: x(j + n) = -x(j). The same holds for y.
class PairTuples {
 public:
  std::size_t size() const { return xs_.size(); }
  Vec x(long j) const;
  Vec y(long j) const;
  const std::vector<Vec>& xs() const { return xs_; }
  const std::vector<Vec>& ys() const { return ys_; }

  friend PairTuples make_pair_tuples(const std::vector<HPoint>& xs,
                                     const std::vector<HPoint>& ys);

 private:
  PairTuples(std::vector<Vec> xs, std::vector<Vec> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {}
  std::vector<Vec> xs_;
  std::vector<Vec> ys_;
};

PairTuples make_pair_tuples(const std::vector<HPoint>& xs,
                            const std::vector<HPoint>& ys);

// Normalizes representatives of a cyclically ordered tuple (see PairTuples).
// Throws DuplicatePoint or NotCyclicallyOrdered.
std::vector<Vec> normalize_cyclic_tuple(const std::vector<HPoint>& points);

// Total order on RP^1 cut just after the point at infinity: affine points in
// increasing order, then (1:0). Returns -1, 0, +1.
int compare_on_line(const Vec& a, const Vec& b);
// True iff b lies strictly inside the positive arc from a to c.
bool strictly_between(const Vec& a, const Vec& b, const Vec& c);

HPoint affine_point(const Scalar& x);
HPoint point_at_infinity();

}  // namespace vertexlab
