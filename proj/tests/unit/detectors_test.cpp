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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "vertexlab/campaigns.hpp"
#include "vertexlab/detectors.hpp"
#include "vertexlab/embeddings.hpp"
#include "vertexlab/error.hpp"

namespace vertexlab {
namespace {

template <typename Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorCode::ParseError;
}

Point2 pt(long x, long y) { return {Scalar(x), Scalar(y)}; }

oracle::Vec monomials(const Point2& p) {
  return {p.x * p.x, p.y * p.y, Scalar(1), p.x * p.y, p.y, p.x};
}

// Sign of the conic through five points at p, up to one global sign: the 6x6
// monomial determinant is linear in p and vanishes on the five points.
int conic_det_sign(const std::vector<Point2>& five, const Point2& p) {
  oracle::Matrix m;
  for (const auto& q : five) m.push_back(monomials(q));
  m.push_back(monomials(p));
  return sgn(oracle::leibniz_det(m));
}

std::vector<std::size_t> oracle_extremal_triples(const PlanarConvexPolygon& p) {
  std::vector<std::size_t> out;
  const long n = static_cast<long>(p.size());
  for (long i = 0; i < n; ++i) {
    const auto &a = p.vertex(i), &b = p.vertex(i + 1), &c = p.vertex(i + 2);
    if (oracle::circle_side(a, b, c, p.vertex(i - 1)) *
            oracle::circle_side(a, b, c, p.vertex(i + 3)) >=
        0) {
      out.push_back(static_cast<std::size_t>(i));
    }
  }
  return out;
}

std::vector<std::size_t> oracle_extremal_quintuples(const PlanarConvexPolygon& p) {
  std::vector<std::size_t> out;
  const long n = static_cast<long>(p.size());
  for (long i = 0; i < n; ++i) {
    std::vector<Point2> five;
    for (long k = 0; k < 5; ++k) five.push_back(p.vertex(i + k));
    if (conic_det_sign(five, p.vertex(i - 1)) * conic_det_sign(five, p.vertex(i + 5)) >= 0) {
      out.push_back(static_cast<std::size_t>(i));
    }
  }
  return out;
}

TEST(SideOfCircle, UnitCircleExamples) {
  const Point2 a = pt(1, 0), b = pt(0, 1), c = pt(-1, 0);
  EXPECT_EQ(side_of_circle(a, b, c, pt(0, 0)), 1);
  EXPECT_EQ(side_of_circle(c, b, a, pt(0, 0)), 1);
  EXPECT_EQ(side_of_circle(a, b, c, pt(0, -1)), 0);
  EXPECT_EQ(side_of_circle(a, b, c, {ratio(3, 5), ratio(-4, 5)}), 0);
  EXPECT_EQ(side_of_circle(a, b, c, pt(2, 0)), -1);
  EXPECT_EQ(code_of([&] { side_of_circle(a, pt(2, 0), pt(3, 0), pt(0, 0)); }),
            ErrorCode::CollinearCircle);
}

TEST(SideOfCircle, AgreesWithCircumcenterOracleAndVeroneseHyperplane) {
  oracle::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    Point2 a{g.rational(), g.rational()}, b{g.rational(), g.rational()},
        c{g.rational(), g.rational()};
    if (orientation(a, b, c) == 0) continue;
    const Point2 p{g.rational(), g.rational()}, q{g.rational(), g.rational()};
    EXPECT_EQ(side_of_circle(a, b, c, p), oracle::circle_side(a, b, c, p));
    // The plane through the three images in RP^3 is the circle.
    const Matrix rows{embed_point(EmbeddingKind::Veronese3, Vec{a.x, a.y, 1}),
                      embed_point(EmbeddingKind::Veronese3, Vec{b.x, b.y, 1}),
                      embed_point(EmbeddingKind::Veronese3, Vec{c.x, c.y, 1})};
    const Hyperplane h(nullspace_basis(rows, 4).at(0));
    const int hp = h.side(embed_point(EmbeddingKind::Veronese3, Vec{p.x, p.y, 1}));
    const int hq = h.side(embed_point(EmbeddingKind::Veronese3, Vec{q.x, q.y, 1}));
    EXPECT_EQ(side_of_circle(a, b, c, p) * side_of_circle(a, b, c, q), hp * hq);
  }
}

TEST(ExtremalTriples, QuadrilateralIsTautological) {
  const auto quad = PlanarConvexPolygon::make({pt(0, 0), pt(5, 1), pt(4, 3), pt(1, 7)});
  const auto r = extremal_triples(quad);
  EXPECT_EQ(r.positions, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(r.count, 4u);
}

TEST(ExtremalTriples, CocircularPolygonIsAllBoundary) {
  const auto p = PlanarConvexPolygon::make({pt(5, 0), pt(3, 4), pt(0, 5), pt(-4, 3), pt(-5, 0),
                                            pt(-3, -4), pt(0, -5), pt(4, -3)});
  const auto r = extremal_triples(p);
  EXPECT_EQ(r.count, 8u);
  EXPECT_EQ(r.boundary_hits.size(), 8u);
  const auto q = extremal_quintuples(p);
  EXPECT_EQ(q.count, 8u);
  EXPECT_EQ(q.boundary_hits.size(), 8u);
}

TEST(ExtremalTriples, RandomPolygonsMatchOracleAndTheorem) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 5 + seed % 12;
    const auto p = random_convex_polygon(n, seed);
    const auto r = extremal_triples(p);
    EXPECT_EQ(r.positions, oracle_extremal_triples(p)) << seed;
    EXPECT_EQ(r.count, r.positions.size());
    EXPECT_GE(r.count, 4u);
    if (r.boundary_hits.empty()) EXPECT_EQ(r.count % 2, 0u);
  }
}

TEST(ExtremalTriples, InvariantUnderOrientationPreservingSimilarity) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto p = random_convex_polygon(9, seed);
    std::vector<Point2> moved;
    // Rotation by the 3-4-5 angle, scaling by 2, translation by (7, -3).
    for (const auto& v : p.vertices()) {
      moved.push_back({2 * (ratio(3, 5) * v.x - ratio(4, 5) * v.y) + 7,
                       2 * (ratio(4, 5) * v.x + ratio(3, 5) * v.y) - 3});
    }
    const auto q = PlanarConvexPolygon::make(moved, OrientationPolicy::Reject);
    EXPECT_EQ(extremal_triples(q), extremal_triples(p));
  }
}

TEST(Conic, FivePointsOnTheUnitCircle) {
  const std::vector<Vec> pts{{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1},
                             {ratio(3, 5), ratio(4, 5), 1}};
  const Conic q = conic_through(pts);
  EXPECT_EQ(q, Conic::from_coefficients(Vec{1, 1, -1, 0, 0, 0}));
  EXPECT_EQ(q, Conic::from_coefficients(Vec{-3, -3, 3, 0, 0, 0}));
  for (const auto& p : pts) EXPECT_EQ(q.evaluate(p), 0);
  EXPECT_EQ(q.side_product(Vec{0, 0, 1}, Vec{2, 0, 1}), -1);
  EXPECT_EQ(q.side_product(Vec{0, 0, 1}, Vec{0, 0, 5}), 1);
}

TEST(Conic, ConsecutiveVerticesLieOnTheirConic) {
  const auto p = random_convex_polygon(8, 5);
  std::vector<Vec> five;
  for (long k = 0; k < 5; ++k) five.push_back(p.lift(k + 2));
  const Conic q = conic_through(five);
  for (const auto& v : five) EXPECT_EQ(q.evaluate(v), 0);
}

TEST(Conic, DegenerateConfigurations) {
  // Four collinear points leave a pencil of conics.
  const std::vector<Vec> four{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {3, 0, 1}, {0, 1, 1}};
  EXPECT_EQ(code_of([&] { conic_through(four); }), ErrorCode::DegenerateConfiguration);
  // Three collinear points still pin down a line pair.
  const std::vector<Vec> three{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {1, 2, 1}};
  const Conic pair = conic_through(three);
  EXPECT_EQ(pair.evaluate(Vec{7, 0, 1}), 0);
  EXPECT_EQ(pair.evaluate(Vec{2, 3, 1}), 0);  // on the line through (0,1) and (1,2)
}

TEST(ExtremalQuintuples, HexagonIsTautological) {
  const auto hex = PlanarConvexPolygon::make(
      {pt(0, 0), pt(4, -1), pt(7, 2), pt(6, 6), pt(2, 7), pt(-1, 3)});
  const auto r = extremal_quintuples(hex);
  EXPECT_EQ(r.positions, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(ExtremalQuintuples, RandomPolygonsMatchOracleAndTheorem) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 7 + seed % 8;
    const auto p = random_convex_polygon(n, seed);
    const auto r = extremal_quintuples(p);
    EXPECT_EQ(r.positions, oracle_extremal_quintuples(p)) << seed;
    EXPECT_GE(r.count, 6u);
    if (r.boundary_hits.empty()) EXPECT_EQ(r.count % 2, 0u);
  }
}

TEST(ExtremalQuintuples, InvariantUnderConvexityPreservingProjectiveMap) {
  // (x, y) -> (x, y) / (x + y - lo + 1); the denominator is positive on every vertex.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto p = random_convex_polygon(9, seed);
    Scalar lo = 0;
    for (const auto& v : p.vertices()) lo = std::min(lo, Scalar(v.x + v.y));
    std::vector<Point2> moved;
    for (const auto& v : p.vertices()) {
      const Scalar w = v.x + v.y - lo + 1;
      moved.push_back({v.x / w, v.y / w});
    }
    const auto q = PlanarConvexPolygon::make(moved, OrientationPolicy::Reject);
    EXPECT_EQ(extremal_quintuples(q).positions, extremal_quintuples(p).positions) << seed;
  }
}

std::vector<HPoint> affine_tuple(const std::vector<Scalar>& xs) {
  std::vector<HPoint> out;
  for (const auto& x : xs) out.push_back(affine_point(x));
  return out;
}

std::vector<Scalar> sorted_distinct(oracle::Gen& g, std::size_t n) {
  std::vector<Scalar> v;
  while (v.size() < n) {
    Scalar s = g.rational(40, 4);
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
  }
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Ghys, IdenticalAndProjectivelyRelatedTuplesHaveZeroDiffs) {
  const auto xs = affine_tuple({0, 1, 3, 4, 7});
  const auto same = make_pair_tuples(xs, xs);
  for (const auto& d : cross_ratio_diffs(same)) EXPECT_EQ(d, 0);
  // x -> (2x + 1) / (x + 1) is increasing on x > -1.
  std::vector<HPoint> ys;
  for (const auto& p : xs) ys.push_back(HPoint(Vec{2 * p[0] + p[1], p[0] + p[1]}));
  const auto related = make_pair_tuples(xs, ys);
  for (const auto& d : cross_ratio_diffs(related)) EXPECT_EQ(d, 0);
  const auto r = ghys_extremal_triples(related);
  EXPECT_EQ(r.count, 5u);
  EXPECT_EQ(r.boundary_hits.size(), 5u);
}

TEST(Ghys, FourPairsAreAllExtremal) {
  oracle::Gen g(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto ys = sorted_distinct(g, 4);
    std::rotate(ys.begin(), ys.begin() + g.integer(0, 3), ys.end());
    const auto t = make_pair_tuples(affine_tuple(sorted_distinct(g, 4)), affine_tuple(ys));
    EXPECT_EQ(ghys_extremal_triples(t).count, 4u);
  }
}

TEST(Ghys, RandomAffineTuplesMatchCrossRatioOracle) {
  oracle::Gen g(22);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(4, 12));
    const auto xs = sorted_distinct(g, n);
    auto ys = sorted_distinct(g, n);
    std::rotate(ys.begin(), ys.begin() + g.integer(0, static_cast<long>(n) - 1), ys.end());
    const auto t = make_pair_tuples(affine_tuple(xs), affine_tuple(ys));
    const auto diffs = cross_ratio_diffs(t);
    std::vector<Scalar> expect;
    for (std::size_t j = 0; j < n; ++j) {
      const auto at = [&](const std::vector<Scalar>& v, std::size_t k) { return v[(j + k) % n]; };
      expect.push_back(oracle::affine_cross_ratio(at(ys, 0), at(ys, 1), at(ys, 2), at(ys, 3)) -
                       oracle::affine_cross_ratio(at(xs, 0), at(xs, 1), at(xs, 2), at(xs, 3)));
    }
    ASSERT_EQ(diffs, expect);
    std::vector<std::size_t> flagged;
    for (std::size_t i = 0; i < n; ++i) {
      const int a = sgn(expect[(i + n - 1) % n]);
      const int b = sgn(expect[i]);
      if (a * b <= 0) flagged.push_back(i);
    }
    const auto r = ghys_extremal_triples(t);
    EXPECT_EQ(r.positions, flagged);
    EXPECT_GE(r.count, 4u);
  }
}

TEST(Ghys, InvariantUnderIndependentProjectiveMaps) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto t = random_pair_tuples(4 + seed % 9, seed);
    // Orientation-preserving maps of RP^1: positive determinant.
    const ProjMap mx(Matrix{{2, 1}, {1, 1}});
    const ProjMap my(Matrix{{1, -3}, {1, 2}});
    std::vector<HPoint> xs, ys;
    for (const auto& v : t.xs()) xs.push_back(HPoint(mx.apply(v)));
    for (const auto& v : t.ys()) ys.push_back(HPoint(my.apply(v)));
    const auto moved = make_pair_tuples(xs, ys);
    EXPECT_EQ(ghys_extremal_triples(moved).positions, ghys_extremal_triples(t).positions);
  }
}

TEST(Flattenings, SimplexHasDPlusOne) {
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto r = flattenings_det(simplex(d));
    EXPECT_EQ(r.count, d + 1) << d;
    if (d <= 6) EXPECT_EQ(flattenings_sep(simplex(d)).positions, r.positions);
  }
  EXPECT_EQ(flattenings_sep(simplex(2)).count, 3u);
}

TEST(Flattenings, AffineConvexPolygonHasNone) {
  const auto p = make_planar({pt(0, 0), pt(5, 1), pt(6, 4), pt(2, 6), pt(-1, 3)});
  for (const auto& d : flattening_determinants(p)) EXPECT_GT(sgn(d), 0);
  EXPECT_EQ(flattenings_det(p).count, 0u);
  EXPECT_EQ(flattenings_sep(p).count, 0u);
}

TEST(Flattenings, ZeroDeterminantIsRejected) {
  const LiftedPolygon p(2, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}, 1);
  EXPECT_EQ(code_of([&] { flattenings_det(p); }), ErrorCode::DegenerateFlattening);
}

TEST(Flattenings, DeterminantAndSeparationPathsAgreeWithOracle) {
  oracle::Gen g(31);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.integer(2, 5));
    const std::size_t n = d + 1 + static_cast<std::size_t>(g.integer(0, 4));
    const int w = g.integer(0, 1) ? 1 : -1;
    const LiftedPolygon p = oracle::generic_polygon(g, d, n, w);
    const auto det_path = flattenings_det(p);
    EXPECT_EQ(det_path.positions, oracle::flattening_positions(p)) << trial;
    EXPECT_EQ(flattenings_sep(p).positions, det_path.positions) << trial;
    const bool odd = w == -1 && d % 2 == 0;
    EXPECT_EQ(det_path.count % 2 == 1, odd) << trial;
  }
}

TEST(Flattenings, StrictlyConvexMomentPolygonsHaveAtLeastDPlusOne) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t d = 2 + seed % 4;
    const auto s = random_strictly_convex_polygon(d, d + 1 + seed % 5, seed);
    ASSERT_TRUE(s.strictly_convex);
    EXPECT_GE(flattenings_det(s.polygon).count, d + 1);
  }
}

TEST(Flattenings, InvariantUnderLiftChangesAndProjectiveMaps) {
  oracle::Gen g(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.integer(2, 5));
    const std::size_t n = d + 1 + static_cast<std::size_t>(g.integer(0, 4));
    const LiftedPolygon p = oracle::generic_polygon(g, d, n, g.integer(0, 1) ? 1 : -1);
    const auto expected = flattenings_det(p).positions;

    auto lifts = p.lifts();
    for (auto& v : lifts) v = scaled(v, g.positive());
    EXPECT_EQ(flattenings_det(LiftedPolygon(d, lifts, p.wrap())).positions, expected);

    auto flipped = p.lifts();
    for (auto& v : flipped) v = scaled(v, Scalar(-1));
    EXPECT_EQ(flattenings_det(LiftedPolygon(d, flipped, p.wrap())).positions, expected);

    const ProjMap m(g.invertible(d + 1));
    EXPECT_EQ(flattenings_det(p.mapped(m)).positions, expected);
    EXPECT_EQ(flattenings_sep(p.mapped(m)).positions, expected);
  }
}

}  // namespace
}  // namespace vertexlab
