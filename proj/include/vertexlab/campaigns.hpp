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
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "vertexlab/polygon.hpp"
#include "vertexlab/projective.hpp"

namespace vertexlab {

// ---------------------------------------------------------------- Generators

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Random convex polygon with integer vertices: random edge vectors summing to
// zero, sorted by angle and accumulated. Deterministic per seed.
PlanarConvexPolygon random_convex_polygon(std::size_t n, std::uint64_t seed);

// Two independent cyclically ordered tuples of rational points (occasionally
// including the point at infinity), each started at a random rotation.
PairTuples random_pair_tuples(std::size_t n, std::uint64_t seed);

ProjMap random_proj_map(std::size_t dim, std::mt19937_64& rng);

struct StrictlyConvexSample {
  LiftedPolygon polygon;
  bool perturbed;         // false when the plain moment polygon was used
  bool strictly_convex;   // result of the exact decision on `polygon`
};

// Moment-curve polygon with a random projective map applied and, when the
// exact strict-convexity decision still accepts it, a random perturbation of
// the lifts. Every returned polygon has been run through the decision.
StrictlyConvexSample random_strictly_convex_polygon(std::size_t dim, std::size_t n,
                                                    std::uint64_t seed);

// Whether distinct non-adjacent edges of a polygon in RP^2 are disjoint.
bool is_embedded_projective(const LiftedPolygon& polygon);
// Same on S^2, where each edge is the minor great-circle arc between lifts.
bool is_embedded_spherical(const LiftedPolygon& polygon);
bool is_antipodally_symmetric(const LiftedPolygon& polygon);
bool on_unit_sphere(const LiftedPolygon& polygon);

// Embedded non-contractible polygon in RP^2 (wrap -1).
LiftedPolygon random_embedded_noncontractible(std::size_t n, std::uint64_t seed);

// Centrally symmetric embedded polygon on S^2 with 2 * half_size rational
// unit-vector vertices; it bisects the sphere's area by symmetry. Needs
// half_size >= 3.
LiftedPolygon random_symmetric_spherical(std::size_t half_size, std::uint64_t seed);

// ----------------------------------------------------------------- Campaigns

enum class CampaignKind { Four, Six, Ghys, Barner, Moebius, SegreArea, BarnerK };

std::string_view kind_name(CampaignKind kind);
std::optional<CampaignKind> parse_kind(std::string_view name);
bool is_conjecture(CampaignKind kind);

struct CampaignConfig {
  CampaignKind kind = CampaignKind::Four;
  std::size_t trials = 100;
  // Zero means "use the default range for this kind".
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t dim = 3;
  std::uint64_t seed = 1;
  // Resample instances whose detector reports boundary hits instead of
  // counting them.
  bool strict = false;
  std::size_t jobs = 1;
};

// Fills default ranges and rejects configurations outside each statement's
// hypothesis. Throws ConfigInvalid.
CampaignConfig validated(CampaignConfig config);

using Instance = std::variant<PlanarConvexPolygon, PairTuples, LiftedPolygon>;

struct InstanceRecord {
  CampaignKind kind = CampaignKind::Four;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t bound = 0;
  Instance instance;
  // barner_k: the hyperplane whose multiplicity sets the bound.
  std::optional<Hyperplane> hyperplane;
};

struct CampaignReport {
  CampaignConfig config;
  std::map<std::size_t, std::size_t> histogram;
  std::size_t instances = 0;
  std::size_t min_count = 0;
  std::size_t max_count = 0;
  // Smallest count - bound over all instances; negative iff violations exist.
  long min_margin = 0;
  std::size_t bound = 0;
  std::vector<InstanceRecord> violations;
  // Up to three instances attaining min_margin, kept for auditing.
  std::vector<InstanceRecord> extremes;
  std::size_t boundary_instances = 0;
  std::size_t resampled = 0;
  // Instances without boundary hits whose count has unexpected parity.
  std::size_t parity_anomalies = 0;
  // Instances dropped because they fell outside the hypothesis class.
  std::size_t excluded = 0;
  // n -> (min count, max count) over the instances of that size.
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> count_range_by_size;
  std::vector<std::string> notes;
  std::string outcome;
  double wall_time_ms = 0;
};

// Theorem campaigns: four, six, ghys, barner.
CampaignReport run_campaign(CampaignConfig config);
// Conjecture searches: moebius, segre_area, barner_k. Evidence only.
CampaignReport search_conjecture(CampaignConfig config);

struct Reverification {
  std::size_t recomputed = 0;
  bool matches_record = false;   // recomputed count (and bound) equal the record
  bool satisfies_bound = false;  // recomputed count >= bound
  bool hypothesis_holds = false; // instance is in the statement's input class
};

// Recomputes a serialized instance from scratch.
Reverification reverify(const InstanceRecord& record);

// ---------------------------------------------------------------- Schwarzian

enum class TestFunction {
  Cubic,       // x + x^3, Schwarzian 6 at 0
  Projective,  // x / (1 + x), Schwarzian 0
};

struct SchwarzianRow {
  double epsilon;
  double value;     // ([f(0), f(e), f(2e), f(3e)] - [0, e, 2e, 3e]) / e^2
  double residual;  // value - S(f)(0)
};

struct SchwarzianTable {
  TestFunction function;
  double schwarzian_at_zero;
  std::vector<SchwarzianRow> rows;
};

// Cross-ratios are evaluated exactly on the rational value of each epsilon;
// only the reported table is floating point. Epsilons must be positive and
// strictly decreasing (ConfigInvalid otherwise).
SchwarzianTable schwarzian_check(const std::vector<double>& epsilons,
                                 TestFunction function = TestFunction::Cubic);
Scalar schwarzian_quotient(const Scalar& epsilon, TestFunction function);

}  // namespace vertexlab
