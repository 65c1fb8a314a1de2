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

#include <array>
#include <cstddef>

#include "vertexlab/detectors.hpp"
#include "vertexlab/polygon.hpp"
#include "vertexlab/projective.hpp"

namespace vertexlab {

enum class EmbeddingKind {
  Veronese5,  // RP^2 -> RP^5, (x^2 : y^2 : z^2 : xy : yz : zx)
  Veronese3,  // RP^2 -> RP^3, (x^2 + y^2 : z^2 : yz : zx)
  Segre,      // RP^1 x RP^1 -> RP^3, (x1 x2 : x1 y2 : y1 x2 : y1 y2)
};

std::size_t target_dim(EmbeddingKind kind);

// Veronese kinds: p in R^3. Even in p, so the image is independent of the
// representative's sign.
Vec embed_point(EmbeddingKind kind, const Vec& p);
// Segre: p, q in R^2. Bilinear, so it flips sign with either factor.
Vec embed_point(EmbeddingKind kind, const Vec& p, const Vec& q);

// Image polygons use wrap +1: the Veronese maps are even, and the two
// anti-closing factors of a PairTuples lift cancel under the Segre map.
// Throws NotGeneric when the image fails the general-position check, in which
// case the caller should perturb the source.
LiftedPolygon image_polygon(EmbeddingKind kind, const PlanarConvexPolygon& source);
LiftedPolygon image_polygon(const PairTuples& source);

// h(embed_point(Veronese5, p)) == Q(p) for every p.
Hyperplane conic_to_hyperplane(const Conic& q);

// Hyperplane of RP^5 for the line pair (V_i1 V_i2) u (V_i3 V_i4).
Hyperplane witness_hyperplane(const PlanarConvexPolygon& polygon,
                              const std::array<std::size_t, 4>& indices);

// The projective map of RP^1 with M(xs[k]) = ys[k] for k = 0, 1, 2.
ProjMap mobius_through(const std::array<Vec, 3>& xs, const std::array<Vec, 3>& ys);

// Signed intersection index, on the torus RP^1 x RP^1, of the broken line
// (x_{i-1}, y_{i-1}), ..., (x_{i+3}, y_{i+3}) with the graph of the projective
// map taking x_{i..i+2} to y_{i..i+2}.
//
// Convention: pull y back by the inverse map so the graph becomes the
// diagonal, lift to the universal cover with angle coordinates, and count
// +1 for each crossing where (angle of pulled-back y) - (angle of x)
// increases through a multiple of a half-turn. Only the middle segments
// touch the diagonal at their ends and contribute nothing net, so the index
// reduces to comparing the two end segments. Returns -1, 0 or +1.
int graph_crossing_index(const PairTuples& tuples, std::size_t i);

}  // namespace vertexlab
