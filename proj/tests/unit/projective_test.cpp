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

#include "oracles.hpp"
#include "vertexlab/error.hpp"
#include "vertexlab/polygon.hpp"
#include "vertexlab/projective.hpp"

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

HPoint pt(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return HPoint(v);
}

TEST(HPoint, RejectsZeroAndTooShortVectors) {
  EXPECT_EQ(code_of([] { HPoint(Vec{0, 0, 0}); }), ErrorCode::ZeroVector);
  EXPECT_EQ(code_of([] { HPoint(Vec{1}); }), ErrorCode::DimensionMismatch);
}

TEST(HPoint, EqualityIsUpToScale) {
  EXPECT_EQ(pt({1, 2, 3}), pt({-2, -4, -6}));
  EXPECT_EQ(HPoint(Vec{Scalar(1, 2), 1, 0}), pt({1, 2, 0}));
  EXPECT_FALSE(pt({1, 2, 3}) == pt({1, 2, 4}));
  EXPECT_FALSE(pt({1, 0}) == pt({1, 0, 0}));
}

TEST(HPoint, CanonicalFormHasCoprimeIntegersAndPositiveLead) {
  const HPoint p = HPoint(Vec{Scalar(-2, 3), Scalar(4, 9), 0}).canonical();
  EXPECT_EQ(p.coords(), (Vec{3, -2, 0}));
  EXPECT_EQ(HPoint(Vec{0, -5, 10}).canonical().coords(), (Vec{0, 1, -2}));
}

TEST(Hyperplane, EvaluationIsBilinear) {
  oracle::Gen g(21);
  for (int i = 0; i < 50; ++i) {
    const Vec h = g.vec(4);
    const Vec v = g.vec(4);
    const Scalar a = g.rational();
    const Scalar b = g.positive();
    EXPECT_EQ(Hyperplane(scaled(h, b)).evaluate(scaled(v, a)), a * b * Hyperplane(h).evaluate(v));
  }
}

TEST(ProjMap, RejectsSingularMatrix) {
  EXPECT_EQ(code_of([] { ProjMap(Matrix{{1, 2}, {2, 4}}); }), ErrorCode::SingularMap);
}

TEST(ProjMap, IdentityAndScalingFixPoints) {
  oracle::Gen g(22);
  for (int i = 0; i < 20; ++i) {
    const HPoint p(g.vec(3));
    EXPECT_EQ(apply_map(ProjMap::identity(2), p), p);
    EXPECT_EQ(apply_map(ProjMap(Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), p), p);
  }
}

TEST(ProjMap, PermutationMovesBasisPoints) {
  const ProjMap swap(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(apply_map(swap, pt({1, 0, 0})), pt({0, 1, 0}));
}

TEST(ProjMap, CompositionAndInverse) {
  oracle::Gen g(23);
  for (int i = 0; i < 20; ++i) {
    const ProjMap a(g.invertible(3));
    const ProjMap b(g.invertible(3));
    const Vec v = g.vec(3);
    EXPECT_EQ(a.then(b).apply(v), b.apply(a.apply(v)));
    EXPECT_EQ(a.inverse().apply(a.apply(v)), v);
  }
}

TEST(Det, ValidatesShape) {
  EXPECT_EQ(code_of([] {
              std::vector<Vec> vs{{1, 0, 0}, {0, 1, 0}};
              det(std::span<const Vec>(vs));
            }),
            ErrorCode::DimensionMismatch);
  std::vector<HPoint> basis{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
  EXPECT_EQ(det(std::span<const HPoint>(basis)), 1);
}

TEST(Bracket, AffineRepresentativesGiveDifference) {
  EXPECT_EQ(bracket(Vec{5, 1}, Vec{2, 1}), 3);
  EXPECT_EQ(bracket(Vec{1, 0}, Vec{7, 1}), 1);
}

TEST(CrossRatio, EquallySpacedPointsGiveFour) {
  EXPECT_EQ(cross_ratio(affine_point(0), affine_point(1), affine_point(2), affine_point(3)), 4);
}

TEST(CrossRatio, MatchesAffineFormula) {
  oracle::Gen g(24);
  for (int i = 0; i < 200; ++i) {
    Scalar a = g.rational(), b = g.rational(), c = g.rational(), d = g.rational();
    if (a == b || c == d || a == c || b == d) continue;
    EXPECT_EQ(cross_ratio(affine_point(a), affine_point(b), affine_point(c), affine_point(d)),
              oracle::affine_cross_ratio(a, b, c, d));
  }
}

TEST(CrossRatio, HandlesPointAtInfinity) {
  // Limit of (c-a)(d-b)/((b-a)(d-c)) as d -> infinity is (c-a)/(b-a).
  EXPECT_EQ(cross_ratio(affine_point(0), affine_point(1), affine_point(3), point_at_infinity()),
            3);
}

TEST(CrossRatio, DegenerateDenominatorThrows) {
  EXPECT_EQ(code_of([] {
              cross_ratio(affine_point(1), affine_point(1), affine_point(2), affine_point(3));
            }),
            ErrorCode::DegenerateInput);
  EXPECT_EQ(code_of([] {
              cross_ratio(affine_point(0), affine_point(1), affine_point(2), affine_point(2));
            }),
            ErrorCode::DegenerateInput);
}

TEST(CrossRatio, InvariantUnderProjectiveMaps) {
  oracle::Gen g(25);
  int checked = 0;
  while (checked < 200) {
    std::vector<HPoint> p;
    for (int k = 0; k < 4; ++k) p.emplace_back(g.vec(2));
    if (p[0] == p[1] || p[2] == p[3] || p[0] == p[2] || p[1] == p[3]) continue;
    const ProjMap m(g.invertible(2));
    EXPECT_EQ(cross_ratio(p[0], p[1], p[2], p[3]),
              cross_ratio(apply_map(m, p[0]), apply_map(m, p[1]), apply_map(m, p[2]),
                          apply_map(m, p[3])));
    ++checked;
  }
}

TEST(CrossRatio, CyclicShiftOfFourIsFourThirds) {
  EXPECT_EQ(cyclic_shift_cross_ratio(4), Scalar(4, 3));
  EXPECT_EQ(cross_ratio(affine_point(3), affine_point(0), affine_point(1), affine_point(2)),
            Scalar(4, 3));
}

TEST(CrossRatio, CyclicShiftMatchesDirectEvaluation) {
  oracle::Gen g(26);
  int checked = 0;
  while (checked < 200) {
    Scalar a = g.rational(), b = g.rational(), c = g.rational(), d = g.rational();
    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
    const Scalar t = oracle::affine_cross_ratio(a, b, c, d);
    EXPECT_EQ(cyclic_shift_cross_ratio(t), oracle::affine_cross_ratio(d, a, b, c));
    // Applying the transformation twice returns the input.
    EXPECT_EQ(cyclic_shift_cross_ratio(cyclic_shift_cross_ratio(t)), t);
    ++checked;
  }
}

TEST(GeneralPosition, SimplexVerticesAreGeneric) {
  for (std::size_t d = 2; d <= 6; ++d) {
    EXPECT_TRUE(simplex(d).in_general_position());
  }
}

TEST(GeneralPosition, CollinearTripleIsNotGeneric) {
  std::vector<Vec> pts{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {2, 0, 1}, {5, 7, 1}};
  EXPECT_FALSE(is_general_position(std::span<const Vec>(pts), 2));
}

TEST(GeneralPosition, AgreesWithRankOracle) {
  oracle::Gen g(27);
  for (int i = 0; i < 60; ++i) {
    std::vector<Vec> pts;
    for (int k = 0; k < 6; ++k) pts.push_back(g.vec(3, 2));
    if (g.integer(0, 2) == 0) pts[4] = add(pts[1], pts[2]);  // plant a collinear triple
    bool generic = true;
    for_each_subset(pts.size(), 3, [&](const std::vector<std::size_t>& s) {
      if (oracle::minor_rank({pts[s[0]], pts[s[1]], pts[s[2]]}) < 3) generic = false;
      return generic;
    });
    for_each_subset(pts.size(), 2, [&](const std::vector<std::size_t>& s) {
      if (oracle::minor_rank({pts[s[0]], pts[s[1]]}) < 2) generic = false;
      return generic;
    });
    EXPECT_EQ(is_general_position(std::span<const Vec>(pts), 2), generic);
  }
}

TEST(GeneralPosition, PerturbedDegenerateSetBecomesGeneric) {
  oracle::Gen g(28);
  std::vector<Vec> pts{{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {0, 1, 1}, {3, 5, 1}};
  ASSERT_FALSE(is_general_position(std::span<const Vec>(pts), 2));
  for (auto& p : pts) {
    p[0] += Scalar(g.integer(-100, 100), 997);
    p[1] += Scalar(g.integer(-100, 100), 991);
  }
  bool generic = true;
  for_each_subset(pts.size(), 3, [&](const std::vector<std::size_t>& s) {
    if (oracle::leibniz_det({pts[s[0]], pts[s[1]], pts[s[2]]}) == 0) generic = false;
    return true;
  });
  EXPECT_EQ(is_general_position(std::span<const Vec>(pts), 2), generic);
}

TEST(GeneralPosition, WindowedModeIsWeaker) {
  // Collinear triple {0, 3, 6} is far apart cyclically in a 9-gon.
  std::vector<Vec> pts;
  oracle::Gen g(29);
  for (int k = 0; k < 9; ++k) pts.push_back(g.vec(3, 50));
  pts[6] = add(pts[0], pts[3]);
  EXPECT_FALSE(is_general_position(std::span<const Vec>(pts), 2));
  EXPECT_TRUE(is_general_position(std::span<const Vec>(pts), 2, GeneralPosition::windowed(3)));
}

TEST(ForEachSubset, EnumeratesAllCombinationsInOrder) {
  std::vector<std::vector<std::size_t>> seen;
  for_each_subset(5, 3, [&](const std::vector<std::size_t>& s) {
    seen.push_back(s);
    return true;
  });
  ASSERT_EQ(seen.size(), 10u);
  EXPECT_EQ(seen.front(), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(seen.back(), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

}  // namespace
}  // namespace vertexlab
