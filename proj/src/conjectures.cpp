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
#include <chrono>
#include <random>
#include <string>

#include "campaign_support.hpp"
#include "vertexlab/campaigns.hpp"
#include "vertexlab/detectors.hpp"
#include "vertexlab/embeddings.hpp"
#include "vertexlab/error.hpp"
#include "vertexlab/incidence.hpp"

namespace vertexlab {

namespace {

std::size_t pick_size(const CampaignConfig& c, std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  return std::uniform_int_distribution<std::size_t>(c.n_min, c.n_max)(rng);
}

detail::TrialOutcome flattening_trial(const CampaignConfig& c, std::size_t i, std::uint64_t s,
                                      LiftedPolygon polygon, std::size_t bound) {
  detail::TrialOutcome out;
  const DetectorReport r = flattenings_det(polygon);
  out.count = r.count;
  out.bound = bound;
  out.parity_anomaly = (r.count % 2 == 1) != detail::odd_flattening_parity(polygon);
  out.record = InstanceRecord{c.kind, i, s, r.count, bound, std::move(polygon), std::nullopt};
  return out;
}

detail::TrialOutcome moebius_trial(const CampaignConfig& c, std::size_t i) {
  const std::uint64_t trial_seed = mix_seed(c.seed, i);
  const std::uint64_t s = mix_seed(trial_seed, 1);
  return flattening_trial(c, i, s, random_embedded_noncontractible(pick_size(c, trial_seed), s),
                          3);
}

detail::TrialOutcome segre_area_trial(const CampaignConfig& c, std::size_t i) {
  const std::uint64_t trial_seed = mix_seed(c.seed, i);
  const std::uint64_t s = mix_seed(trial_seed, 1);
  const std::size_t half = std::max<std::size_t>(3, pick_size(c, trial_seed) / 2);
  return flattening_trial(c, i, s, random_symmetric_spherical(half, s), 4);
}

// A strictly convex Segre image when one turns up quickly, otherwise a
// perturbed moment polygon.
std::optional<LiftedPolygon> segre_candidate(std::size_t n, std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    try {
      auto p = image_polygon(random_pair_tuples(n, mix_seed(seed, attempt)));
      if (is_strictly_convex(p).strictly_convex) return p;
    } catch (const GeometryError&) {
      // Not generic; draw again.
    }
  }
  return std::nullopt;
}

detail::TrialOutcome barner_k_trial(const CampaignConfig& c, std::size_t i) {
  const std::uint64_t trial_seed = mix_seed(c.seed, i);
  const std::uint64_t s = mix_seed(trial_seed, 1);
  const std::size_t n = pick_size(c, trial_seed);
  const std::size_t d = c.dim;
  std::optional<LiftedPolygon> polygon;
  bool convex = true;
  if (d == 3 && i % 2 == 1 && n >= 4) polygon = segre_candidate(n, s);
  if (!polygon) {
    auto sample = random_strictly_convex_polygon(d, n, s);
    convex = sample.strictly_convex;
    polygon = std::move(sample.polygon);
  }
  std::optional<PencilExtreme> best;
  for_each_subset(n, d - 1, [&](const std::vector<std::size_t>& subset) {
    auto e = pencil_max_multiplicity(*polygon, subset);
    if (!best || e.multiplicity > best->multiplicity) best = std::move(e);
    return true;
  });
  const auto k = static_cast<std::size_t>(best->multiplicity);
  auto out = flattening_trial(c, i, s, std::move(*polygon), k);
  out.record->hyperplane = best->witness;
  out.hypothesis_failed = !convex;
  return out;
}

}  // namespace

CampaignReport search_conjecture(CampaignConfig config) {
  if (!is_conjecture(config.kind)) {
    throw GeometryError(ErrorCode::ConfigInvalid,
                        std::string(kind_name(config.kind)) + " is a theorem campaign");
  }
  const auto c = validated(config);
  const auto start = std::chrono::steady_clock::now();
  std::vector<detail::TrialOutcome> outcomes;
  std::size_t bound = 0;
  std::vector<std::string> notes;
  switch (c.kind) {
    case CampaignKind::Moebius:
      bound = 3;
      notes.push_back("embedded non-contractible polygons in RP^2 (wrap -1)");
      outcomes = detail::run_trials(c.trials, c.jobs,
                                    [&](std::size_t i) { return moebius_trial(c, i); });
      break;
    case CampaignKind::SegreArea:
      bound = 4;
      notes.push_back(
          "sampled from the centrally symmetric subfamily; each polygon bisects the "
          "sphere's area by symmetry");
      outcomes = detail::run_trials(c.trials, c.jobs,
                                    [&](std::size_t i) { return segre_area_trial(c, i); });
      break;
    case CampaignKind::BarnerK: {
      bound = c.dim + 1;
      notes.push_back("bound per instance is the largest pencil multiplicity k found");
      outcomes = detail::run_trials(c.trials, c.jobs,
                                    [&](std::size_t i) { return barner_k_trial(c, i); });
      std::size_t stronger = 0;
      for (const auto& o : outcomes) {
        if (!o.hypothesis_failed && o.bound >= c.dim + 2) ++stronger;
      }
      notes.push_back(std::to_string(stronger) + " instance(s) with k >= d+2");
      break;
    }
    default:
      break;
  }
  auto report = detail::aggregate(c, bound, std::move(outcomes));
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace vertexlab
