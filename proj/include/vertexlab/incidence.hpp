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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vertexlab/polygon.hpp"
#include "vertexlab/projective.hpp"

namespace vertexlab {

// An open broken line A, ..., Z given by consecutive lifts. Its edges are the
// projections of the straight segments between consecutive lifts.
struct OpenChain {
  std::size_t dim;
  std::vector<Vec> lifts;
};

// Lifts start, ..., start + count - 1 of a polygon as an open chain.
OpenChain chain_of(const LiftedPolygon& polygon, long start, std::size_t count);

struct ZeroChain {
  std::size_t start;   // index of the first vertex on the hyperplane
  std::size_t length;  // number of consecutive vertices on the hyperplane
  friend bool operator==(const ZeroChain&, const ZeroChain&) = default;
};

struct MultiplicityResult {
  int value = 0;
  std::vector<ZeroChain> degenerate_chains;
};

enum class Transversality {
  Transverse,          // no vertex on H
  TransverseAtVertex,  // every vertex on H has its two edges on opposite sides
  NotTransverse,
};

Transversality transverse(const LiftedPolygon& polygon, const Hyperplane& h);
Transversality transverse(const OpenChain& chain, const Hyperplane& h);

// Exact intersection multiplicity: the largest number of crossings of a
// transverse hyperplane arbitrarily close to h.
//
// Along the cyclic sign sequence of h on the lifts, each zero-free edge with a
// sign change contributes 1. A maximal run of m vertices on h flanked by signs
// sL, sR contributes m + 1 when m + 1 has the parity of (sL != sR) and m
// otherwise: the run's lifts are independent, so a nearby hyperplane can give
// them any small signs. For open chains a run touching an end contributes m.
//
// Throws ChainTooLong when a run exceeds d vertices and EdgeInsideHyperplane
// when a run's lifts are linearly dependent (no perturbation separates them).
MultiplicityResult multiplicity(const LiftedPolygon& polygon, const Hyperplane& h);
MultiplicityResult multiplicity(const OpenChain& chain, const Hyperplane& h);

// Max crossing count over `trials` random transverse perturbations of h, each
// too small to flip the sign at any vertex off h. Never exceeds the exact
// multiplicity. Throws InvalidTrials when trials == 0.
int multiplicity_sampled(const LiftedPolygon& polygon, const Hyperplane& h,
                         std::size_t trials, std::uint64_t seed);

// Whether the endpoints of the chain are separated by h (odd multiplicity).
bool separated(const OpenChain& chain, const Hyperplane& h);

struct PencilSample {
  Hyperplane plane;
  int multiplicity;
};

// Exact sweep of the pencil of hyperplanes through d-1 vertices. The pencil is
// a projective line of hyperplanes on which multiplicity is piecewise
// constant, changing only where another vertex enters the hyperplane, so it
// is evaluated at every such event and once inside every open interval.
std::vector<PencilSample> pencil_sweep(const LiftedPolygon& polygon,
                                       std::span<const std::size_t> indices);

struct PencilExtreme {
  int multiplicity;
  Hyperplane witness;
};

PencilExtreme pencil_min_multiplicity(const LiftedPolygon& polygon,
                                      std::span<const std::size_t> indices);
PencilExtreme pencil_max_multiplicity(const LiftedPolygon& polygon,
                                      std::span<const std::size_t> indices);

struct StrictConvexity {
  bool strictly_convex = false;
  // Witness hyperplane of multiplicity d-1 for every checked (d-1)-subset.
  std::map<std::vector<std::size_t>, Hyperplane> witnesses;
  // First subset whose pencil minimum exceeds d-1, if any.
  std::optional<std::vector<std::size_t>> failing_subset;
  int failing_multiplicity = 0;
};

// Exact decision: every (d-1)-subset of vertices admits a hyperplane of
// multiplicity d-1. Stops at the first failing subset.
StrictConvexity is_strictly_convex(const LiftedPolygon& polygon);

// Removes vertex k and joins its neighbours by the segment between their
// existing lifts, so the removed triangle is contractible.
LiftedPolygon delete_vertex(const LiftedPolygon& polygon, std::size_t k);

// Determinants around a deleted vertex k, in polygon indices:
// old_dets[i] = Delta_{k-d+i} for i = 0..d and
// new_dets[i] = |lift(k-d+i) ... lift(k-d+i+d+1)| with lift(k) omitted, i = 0..d-1.
// new_dets[i] sits between old_dets[i] and old_dets[i+1] when interleaved.
struct DeletionDeterminants {
  std::vector<Scalar> old_dets;
  std::vector<Scalar> new_dets;
};

DeletionDeterminants deletion_determinants(const LiftedPolygon& polygon, std::size_t k);

}  // namespace vertexlab
