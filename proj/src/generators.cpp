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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "vertexlab/campaigns.hpp"
#include "vertexlab/detectors.hpp"
#include "vertexlab/error.hpp"
#include "vertexlab/incidence.hpp"

namespace vertexlab {

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Valtr-style split of n random distinct coordinates into two monotone chains;
// the returned increments sum to zero.
std::vector<long> chain_increments(std::size_t n, long range, std::mt19937_64& rng) {
  std::vector<long> values;
  while (values.size() < n) {
    long v = uniform(rng, -range, range);
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  std::vector<long> inc;
  long last_a = values.front();
  long last_b = values.front();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (uniform(rng, 0, 1) == 0) {
      inc.push_back(values[i] - last_a);
      last_a = values[i];
    } else {
      inc.push_back(last_b - values[i]);
      last_b = values[i];
    }
  }
  inc.push_back(values.back() - last_a);
  inc.push_back(last_b - values.back());
  return inc;
}

// Upper half-plane (including the positive x-axis) sorts before the lower.
bool angle_less(const std::pair<long, long>& a, const std::pair<long, long>& b) {
  auto half = [](const std::pair<long, long>& v) {
    return (v.second > 0 || (v.second == 0 && v.first > 0)) ? 0 : 1;
  };
  if (half(a) != half(b)) return half(a) < half(b);
  return a.first * b.second - a.second * b.first > 0;
}

Scalar random_rational(std::mt19937_64& rng, long range, long max_den) {
  return ratio(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

std::vector<HPoint> random_cyclic_points(std::size_t n, std::mt19937_64& rng) {
  std::vector<HPoint> pts;
  if (uniform(rng, 0, 3) == 0) pts.push_back(point_at_infinity());
  while (pts.size() < n) {
    HPoint p = affine_point(random_rational(rng, 60, 4));
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const HPoint& a, const HPoint& b) {
    return compare_on_line(a.coords(), b.coords()) < 0;
  });
  std::rotate(pts.begin(), pts.begin() + uniform(rng, 0, static_cast<long>(n) - 1), pts.end());
  return pts;
}

// sign of alpha * beta for p = alpha a + beta b on the line through a, b:
// +1 inside the cone, -1 outside, 0 at an endpoint.
int cone_position(const Vec& a, const Vec& b, const Vec& p, int* alpha_sign) {
  const Vec l = cross(a, b);
  const int sa = sgn(dot(cross(p, b), l));
  const int sb = sgn(dot(cross(a, p), l));
  if (alpha_sign != nullptr) *alpha_sign = sa != 0 ? sa : sb;
  return sa * sb;
}

// Edges in R^3 as cones {alpha a + beta b : alpha, beta >= 0}; `projective`
// identifies p with -p.
bool edges_meet(const Vec& a, const Vec& b, const Vec& c, const Vec& d, bool projective) {
  const Vec p = cross(cross(a, b), cross(c, d));
  if (is_zero(p)) {
    // Common line. On the sphere, arcs of one great circle meet only if an
    // endpoint of one lies on the other.
    if (projective) return true;
    auto in_arc = [](const Vec& u, const Vec& v, const Vec& q) {
      const Vec l = cross(u, v);
      return sgn(dot(cross(q, v), l)) >= 0 && sgn(dot(cross(u, q), l)) >= 0;
    };
    return in_arc(a, b, c) || in_arc(a, b, d) || in_arc(c, d, a) || in_arc(c, d, b);
  }
  int sa = 0;
  int sc = 0;
  const int in_ab = cone_position(a, b, p, &sa);
  const int in_cd = cone_position(c, d, p, &sc);
  if (in_ab < 0 || in_cd < 0) return false;
  if (projective) return true;
  // On the sphere p and -p are distinct: both cones must hold the same one.
  return sa == sc;
}

bool embedded(const LiftedPolygon& polygon, bool projective) {
  const long n = static_cast<long>(polygon.size());
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (edges_meet(polygon.lift(i), polygon.lift(i + 1), polygon.lift(j), polygon.lift(j + 1),
                     projective)) {
        return false;
      }
    }
  }
  return true;
}

bool flattenings_defined(const LiftedPolygon& polygon) {
  for (const auto& d : flattening_determinants(polygon)) {
    if (sgn(d) == 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PlanarConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw GeometryError(ErrorCode::TooFewVertices, "n must be >= 4");
  std::mt19937_64 rng(seed);
  const long range = 1000;
  while (true) {
    auto xs = chain_increments(n, range, rng);
    auto ys = chain_increments(n, range, rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::vector<std::pair<long, long>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(xs[i], ys[i]);
    std::sort(edges.begin(), edges.end(), angle_less);
    std::vector<Point2> pts;
    long x = 0;
    long y = 0;
    for (const auto& e : edges) {
      pts.push_back({Scalar(x), Scalar(y)});
      x += e.first;
      y += e.second;
    }
    try {
      return PlanarConvexPolygon::make(std::move(pts), OrientationPolicy::Reject);
    } catch (const GeometryError&) {
      // Parallel or zero edge vectors; draw again.
    }
  }
}

PairTuples random_pair_tuples(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw GeometryError(ErrorCode::TooFewVertices, "n must be >= 4");
  std::mt19937_64 rng(seed);
  auto xs = random_cyclic_points(n, rng);
  auto ys = random_cyclic_points(n, rng);
  return make_pair_tuples(xs, ys);
}

ProjMap random_proj_map(std::size_t dim, std::mt19937_64& rng) {
  while (true) {
    Matrix m(dim + 1, Vec(dim + 1));
    for (std::size_t r = 0; r <= dim; ++r) {
      for (std::size_t c = 0; c <= dim; ++c) m[r][c] = uniform(rng, -2, 2) + (r == c ? 3 : 0);
    }
    if (sgn(determinant(m)) != 0) return ProjMap(std::move(m));
  }
}

StrictlyConvexSample random_strictly_convex_polygon(std::size_t dim, std::size_t n,
                                                    std::uint64_t seed) {
  if (dim < 2 || n < dim + 1) {
    throw GeometryError(ErrorCode::TooFewVertices, "need d >= 2 and n >= d+1");
  }
  std::mt19937_64 rng(seed);
  std::vector<Scalar> params;
  const long range = static_cast<long>(2 * n);
  while (params.size() < n) {
    Scalar t = random_rational(rng, range, 2);
    if (std::find(params.begin(), params.end(), t) == params.end()) params.push_back(t);
  }
  std::sort(params.begin(), params.end());
  const ProjMap map = random_proj_map(dim, rng);
  const LiftedPolygon base = moment_polygon(dim, params).mapped(map);

  for (long den : {8L, 64L, 512L}) {
    auto lifts = base.lifts();
    for (auto& v : lifts) {
      for (auto& c : v) c *= ratio(den + uniform(rng, -1, 1), den);
    }
    LiftedPolygon candidate(dim, std::move(lifts), base.wrap());
    if (!candidate.in_general_position()) continue;
    if (is_strictly_convex(candidate).strictly_convex) return {std::move(candidate), true, true};
  }
  const bool convex = is_strictly_convex(base).strictly_convex;
  return {base, false, convex};
}

bool is_embedded_projective(const LiftedPolygon& polygon) {
  if (polygon.dim() != 2) {
    throw GeometryError(ErrorCode::UnsupportedDimension, "embeddedness is tested in RP^2");
  }
  return embedded(polygon, true);
}

bool is_embedded_spherical(const LiftedPolygon& polygon) {
  if (polygon.dim() != 2) {
    throw GeometryError(ErrorCode::UnsupportedDimension, "embeddedness is tested on S^2");
  }
  // Minor arcs need non-antipodal, distinct consecutive vertices.
  const long n = static_cast<long>(polygon.size());
  for (long i = 0; i < n; ++i) {
    if (is_zero(cross(polygon.lift(i), polygon.lift(i + 1)))) return false;
  }
  return embedded(polygon, false);
}

bool is_antipodally_symmetric(const LiftedPolygon& polygon) {
  const std::size_t n = polygon.size();
  if (n % 2 != 0 || polygon.wrap() != 1) return false;
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (polygon.base(static_cast<long>(i + n / 2)) !=
        scaled(polygon.base(static_cast<long>(i)), Scalar(-1))) {
      return false;
    }
  }
  return true;
}

bool on_unit_sphere(const LiftedPolygon& polygon) {
  for (const auto& v : polygon.lifts()) {
    if (dot(v, v) != 1) return false;
  }
  return true;
}

LiftedPolygon random_embedded_noncontractible(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw GeometryError(ErrorCode::TooFewVertices, "n must be >= 3");
  std::mt19937_64 rng(seed);
  if (uniform(rng, 0, 1) == 0) {
    // Free random points with random lift signs, kept when embedded.
    for (int attempt = 0; attempt < 200; ++attempt) {
      std::vector<Vec> lifts;
      for (std::size_t i = 0; i < n; ++i) {
        const long s = uniform(rng, 0, 1) == 0 ? 1 : -1;
        lifts.push_back({Scalar(s * uniform(rng, -12, 12)), Scalar(s * uniform(rng, -12, 12)),
                         Scalar(s)});
      }
      LiftedPolygon p(2, std::move(lifts), -1);
      if (p.in_general_position() && is_embedded_projective(p) && flattenings_defined(p)) {
        return p;
      }
    }
  }
  // A graph over a line closes through infinity; it is embedded by
  // monotonicity and stays so under any projective map.
  while (true) {
    std::vector<long> ts;
    while (ts.size() < n) {
      long t = uniform(rng, -3 * static_cast<long>(n), 3 * static_cast<long>(n));
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    std::vector<Vec> lifts;
    for (long t : ts) lifts.push_back({Scalar(t), Scalar(uniform(rng, -10, 10)), Scalar(1)});
    LiftedPolygon p = LiftedPolygon(2, std::move(lifts), -1).mapped(random_proj_map(2, rng));
    if (p.in_general_position() && flattenings_defined(p) && is_embedded_projective(p)) {
      return p;
    }
  }
}

LiftedPolygon random_symmetric_spherical(std::size_t half_size, std::uint64_t seed) {
  // With two vertices per half every triple holds an antipodal pair.
  if (half_size < 3) throw GeometryError(ErrorCode::TooFewVertices, "half size must be >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::numbers::pi;
  double amplitude = 0.2 + 1.0 * unit(rng);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vec> half;
    for (std::size_t k = 0; k < half_size; ++k) {
      const double lon = pi * (static_cast<double>(k) + 0.15 + 0.7 * unit(rng)) /
                         static_cast<double>(half_size);
      const double lat = amplitude * (2 * unit(rng) - 1);
      const double ux = std::cos(lat) * std::cos(lon);
      const double uy = std::cos(lat) * std::sin(lon);
      const double uz = std::sin(lat);
      // Inverse stereographic projection of a nearby rational point gives an
      // exact rational point of the unit sphere.
      const long den = 256;
      const Scalar a = ratio(std::lround(ux / (1 - uz) * den), den);
      const Scalar b = ratio(std::lround(uy / (1 - uz) * den), den);
      const Scalar q = a * a + b * b + 1;
      half.push_back({2 * a / q, 2 * b / q, (a * a + b * b - 1) / q});
    }
    std::vector<Vec> lifts = half;
    for (const auto& v : half) lifts.push_back(scaled(v, Scalar(-1)));
    LiftedPolygon p(2, std::move(lifts), 1);
    if (is_embedded_spherical(p) && flattenings_defined(p)) return p;
    if (attempt % 10 == 9) amplitude *= 0.8;
  }
  throw GeometryError(ErrorCode::DegenerateInput, "no embedded symmetric polygon found");
}

}  // namespace vertexlab
