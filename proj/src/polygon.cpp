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

#include "vertexlab/polygon.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "vertexlab/error.hpp"

namespace vertexlab {

LiftedPolygon::LiftedPolygon(std::size_t dim, std::vector<Vec> lifts, int wrap)
    : dim_(dim), lifts_(std::move(lifts)), wrap_(wrap) {
  if (dim_ < 1) {
    throw GeometryError(ErrorCode::UnsupportedDimension, "dimension must be >= 1");
  }
  if (wrap_ != 1 && wrap_ != -1) {
    throw GeometryError(ErrorCode::DegenerateInput, "wrap factor must be +1 or -1");
  }
  if (lifts_.size() < dim_ + 1) {
    throw GeometryError(ErrorCode::TooFewVertices,
                        "a polygon in RP^" + std::to_string(dim_) + " needs at least " +
                            std::to_string(dim_ + 1) + " vertices");
  }
  for (const auto& v : lifts_) {
    if (v.size() != dim_ + 1) {
      throw GeometryError(ErrorCode::DimensionMismatch, "lift length must be dim+1");
    }
    if (is_zero(v)) throw GeometryError(ErrorCode::ZeroVector, "zero lift");
  }
}

std::size_t LiftedPolygon::index(long j) const {
  const long n = static_cast<long>(lifts_.size());
  return static_cast<std::size_t>(((j % n) + n) % n);
}

int LiftedPolygon::lift_sign(long j) const {
  if (wrap_ == 1) return 1;
  const long n = static_cast<long>(lifts_.size());
  long turns = j >= 0 ? j / n : -((-j + n - 1) / n);
  return (turns % 2 == 0) ? 1 : -1;
}

Vec LiftedPolygon::lift(long j) const {
  const Vec& b = base(j);
  return lift_sign(j) == 1 ? b : scaled(b, Scalar(-1));
}

std::vector<Vec> LiftedPolygon::window(long j, std::size_t count) const {
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(lift(j + static_cast<long>(k)));
  return out;
}

bool LiftedPolygon::in_general_position(GeneralPosition mode) const {
  return is_general_position(std::span<const Vec>(lifts_), dim_, mode);
}

LiftedPolygon LiftedPolygon::rescaled(std::size_t vertex, const Scalar& factor) const {
  if (sgn(factor) == 0) throw GeometryError(ErrorCode::ZeroVector, "zero rescaling");
  auto lifts = lifts_;
  lifts.at(vertex) = scaled(lifts[vertex], factor);
  return LiftedPolygon(dim_, std::move(lifts), wrap_);
}

LiftedPolygon LiftedPolygon::negated() const {
  auto lifts = lifts_;
  for (auto& v : lifts) v = scaled(v, Scalar(-1));
  return LiftedPolygon(dim_, std::move(lifts), wrap_);
}

LiftedPolygon LiftedPolygon::mapped(const ProjMap& m) const {
  if (m.dim() != dim_) {
    throw GeometryError(ErrorCode::DimensionMismatch, "map dimension");
  }
  std::vector<Vec> lifts;
  lifts.reserve(lifts_.size());
  for (const auto& v : lifts_) lifts.push_back(m.apply(v));
  return LiftedPolygon(dim_, std::move(lifts), wrap_);
}

LiftedPolygon LiftedPolygon::reclosed() const {
  return LiftedPolygon(dim_, lifts_, -wrap_);
}

Scalar orientation(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

PlanarConvexPolygon PlanarConvexPolygon::make(std::vector<Point2> v,
                                              OrientationPolicy policy) {
  const std::size_t n = v.size();
  if (n < 4) {
    throw GeometryError(ErrorCode::TooFewVertices, "a convex polygon needs n >= 4");
  }
  Scalar area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    area += p.x * q.y - p.y * q.x;
  }
  if (sgn(area) == 0) {
    throw GeometryError(ErrorCode::CollinearTriple, "polygon has zero area");
  }
  if (sgn(area) < 0) {
    if (policy == OrientationPolicy::Reject) {
      throw GeometryError(ErrorCode::NonConvex, "vertices are in clockwise order");
    }
    std::reverse(v.begin(), v.end());
  }
  // Strict convex position: every other vertex is strictly left of each edge.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    for (std::size_t k = 2; k < n; ++k) {
      const int s = sgn(orientation(a, b, v[(i + k) % n]));
      if (s == 0) {
        throw GeometryError(ErrorCode::CollinearTriple,
                            "vertex " + std::to_string((i + k) % n) +
                                " is collinear with edge " + std::to_string(i));
      }
      if (s < 0) {
        throw GeometryError(ErrorCode::NonConvex,
                            "vertex " + std::to_string((i + k) % n) +
                                " is right of edge " + std::to_string(i));
      }
    }
  }
  return PlanarConvexPolygon(std::move(v));
}

const Point2& PlanarConvexPolygon::vertex(long j) const {
  const long n = static_cast<long>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((j % n) + n) % n)];
}

Vec PlanarConvexPolygon::lift(long j) const {
  const auto& p = vertex(j);
  return Vec{p.x, p.y, Scalar(1)};
}

LiftedPolygon make_planar(const PlanarConvexPolygon& polygon) {
  std::vector<Vec> lifts;
  lifts.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) lifts.push_back(polygon.lift(static_cast<long>(i)));
  return LiftedPolygon(2, std::move(lifts), 1);
}

LiftedPolygon make_planar(std::vector<Point2> vertices, OrientationPolicy policy) {
  return make_planar(PlanarConvexPolygon::make(std::move(vertices), policy));
}

LiftedPolygon simplex(std::size_t dim) {
  if (dim < 2) throw GeometryError(ErrorCode::UnsupportedDimension, "simplex needs d >= 2");
  std::vector<Vec> lifts(dim + 1, Vec(dim + 1, Scalar(0)));
  for (std::size_t i = 0; i <= dim; ++i) lifts[i][i] = 1;
  return LiftedPolygon(dim, std::move(lifts), dim % 2 == 1 ? 1 : -1);
}

LiftedPolygon moment_polygon(std::size_t dim, std::span<const Scalar> parameters) {
  if (dim < 1) throw GeometryError(ErrorCode::UnsupportedDimension, "d >= 1");
  for (std::size_t i = 1; i < parameters.size(); ++i) {
    if (!(parameters[i - 1] < parameters[i])) {
      throw GeometryError(ErrorCode::NonIncreasingParameters,
                          "moment-curve parameters must be strictly increasing");
    }
  }
  std::vector<Vec> lifts;
  lifts.reserve(parameters.size());
  for (const auto& t : parameters) {
    Vec v(dim + 1);
    v[0] = 1;
    for (std::size_t k = 1; k <= dim; ++k) v[k] = v[k - 1] * t;
    lifts.push_back(std::move(v));
  }
  return LiftedPolygon(dim, std::move(lifts), dim % 2 == 1 ? 1 : -1);
}

HPoint affine_point(const Scalar& x) { return HPoint(Vec{x, Scalar(1)}); }
HPoint point_at_infinity() { return HPoint(Vec{Scalar(1), Scalar(0)}); }

int compare_on_line(const Vec& a, const Vec& b) {
  const bool a_inf = sgn(a[1]) == 0;
  const bool b_inf = sgn(b[1]) == 0;
  if (a_inf || b_inf) return (a_inf ? 1 : 0) - (b_inf ? 1 : 0);
  const Scalar xa = a[0] / a[1];
  const Scalar xb = b[0] / b[1];
  return cmp(xa, xb) < 0 ? -1 : (cmp(xa, xb) > 0 ? 1 : 0);
}

bool strictly_between(const Vec& a, const Vec& b, const Vec& c) {
  const int ab = compare_on_line(a, b);
  const int bc = compare_on_line(b, c);
  const int ca = compare_on_line(c, a);
  if (ab == 0 || bc == 0 || ca == 0) return false;
  return (ab < 0 && bc < 0) || (bc < 0 && ca < 0) || (ca < 0 && ab < 0);
}

std::vector<Vec> normalize_cyclic_tuple(const std::vector<HPoint>& points) {
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.dim() != 1) {
      throw GeometryError(ErrorCode::DimensionMismatch, "tuple points must lie in RP^1");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw GeometryError(ErrorCode::DuplicatePoint,
                            "points " + std::to_string(i) + " and " + std::to_string(j) +
                                " coincide");
      }
    }
  }
  std::vector<Vec> reps;
  reps.reserve(n);
  reps.push_back(points[0].canonical().coords());
  for (std::size_t i = 1; i < n; ++i) {
    Vec r = points[i].canonical().coords();
    if (sgn(bracket(r, reps.back())) < 0) r = scaled(r, Scalar(-1));
    // The sweep from the first point stays within one open half-turn.
    if (sgn(bracket(r, reps.front())) <= 0) {
      throw GeometryError(ErrorCode::NotCyclicallyOrdered,
                          "point " + std::to_string(i) + " breaks the cyclic order");
    }
    reps.push_back(std::move(r));
  }
  return reps;
}

PairTuples make_pair_tuples(const std::vector<HPoint>& xs, const std::vector<HPoint>& ys) {
  if (xs.size() != ys.size()) {
    throw GeometryError(ErrorCode::LengthMismatch, "X and Y must have equal length");
  }
  if (xs.size() < 4) {
    throw GeometryError(ErrorCode::TooFewVertices, "pair tuples need n >= 4");
  }
  return PairTuples(normalize_cyclic_tuple(xs), normalize_cyclic_tuple(ys));
}

namespace {

Vec anti_closed(const std::vector<Vec>& reps, long j) {
  const long n = static_cast<long>(reps.size());
  const long m = ((j % n) + n) % n;
  const long turns = (j - m) / n;
  const Vec& r = reps[static_cast<std::size_t>(m)];
  return turns % 2 == 0 ? r : scaled(r, Scalar(-1));
}

}  // namespace

Vec PairTuples::x(long j) const { return anti_closed(xs_, j); }
Vec PairTuples::y(long j) const { return anti_closed(ys_, j); }

}  // namespace vertexlab
