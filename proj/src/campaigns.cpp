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

#include "vertexlab/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>

#include "campaign_support.hpp"
#include "vertexlab/detectors.hpp"
#include "vertexlab/error.hpp"
#include "vertexlab/incidence.hpp"

namespace vertexlab {

namespace {

constexpr std::size_t kStrictConvexityBudget = 2000;
constexpr int kMaxResamples = 1000;

struct KindInfo {
  CampaignKind kind;
  std::string_view name;
  bool conjecture;
};

constexpr KindInfo kKinds[] = {
    {CampaignKind::Four, "four", false},
    {CampaignKind::Six, "six", false},
    {CampaignKind::Ghys, "ghys", false},
    {CampaignKind::Barner, "barner", false},
    {CampaignKind::Moebius, "moebius", true},
    {CampaignKind::SegreArea, "segre_area", true},
    {CampaignKind::BarnerK, "barner_k", true},
};

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

[[noreturn]] void invalid(const std::string& what) {
  throw GeometryError(ErrorCode::ConfigInvalid, what);
}

std::size_t pick_size(const CampaignConfig& c, std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  return std::uniform_int_distribution<std::size_t>(c.n_min, c.n_max)(rng);
}

template <typename Detect>
detail::TrialOutcome planar_trial(const CampaignConfig& c, std::size_t i, std::size_t bound,
                                  Detect detect) {
  const std::uint64_t trial_seed = mix_seed(c.seed, i);
  const std::size_t n = pick_size(c, trial_seed);
  detail::TrialOutcome out;
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t s = mix_seed(trial_seed, static_cast<std::uint64_t>(attempt) + 1);
    auto polygon = random_convex_polygon(n, s);
    const DetectorReport r = detect(polygon);
    const bool boundary = !r.boundary_hits.empty();
    if (boundary && c.strict && attempt < kMaxResamples) {
      ++out.resampled;
      continue;
    }
    out.count = r.count;
    out.bound = bound;
    out.boundary = boundary;
    out.parity_anomaly = !boundary && r.count % 2 != 0;
    out.record = InstanceRecord{c.kind, i, s, r.count, bound, std::move(polygon), std::nullopt};
    return out;
  }
}

detail::TrialOutcome ghys_trial(const CampaignConfig& c, std::size_t i) {
  const std::uint64_t trial_seed = mix_seed(c.seed, i);
  const std::size_t n = pick_size(c, trial_seed);
  detail::TrialOutcome out;
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t s = mix_seed(trial_seed, static_cast<std::uint64_t>(attempt) + 1);
    auto tuples = random_pair_tuples(n, s);
    const DetectorReport r = ghys_extremal_triples(tuples);
    const bool boundary = !r.boundary_hits.empty();
    if (boundary && c.strict && attempt < kMaxResamples) {
      ++out.resampled;
      continue;
    }
    out.count = r.count;
    out.bound = 4;
    out.boundary = boundary;
    out.parity_anomaly = !boundary && r.count % 2 != 0;
    out.record = InstanceRecord{c.kind, i, s, r.count, 4, std::move(tuples), std::nullopt};
    return out;
  }
}

detail::TrialOutcome barner_trial(const CampaignConfig& c, std::size_t i) {
  const std::uint64_t trial_seed = mix_seed(c.seed, i);
  const std::size_t n = pick_size(c, trial_seed);
  const std::size_t d = c.dim;
  const std::uint64_t s = mix_seed(trial_seed, 1);
  detail::TrialOutcome out;
  std::optional<LiftedPolygon> polygon;
  if (binomial(n, d - 1) <= kStrictConvexityBudget) {
    auto sample = random_strictly_convex_polygon(d, n, s);
    out.hypothesis_failed = !sample.strictly_convex;
    out.perturbed = sample.perturbed;
    polygon = std::move(sample.polygon);
  } else {
    // Beyond the budget the plain moment polygon is used unverified.
    std::mt19937_64 rng(s);
    std::vector<Scalar> t;
    for (std::size_t k = 0; k < n; ++k) t.emplace_back(static_cast<long>(k));
    polygon = moment_polygon(d, t).mapped(random_proj_map(d, rng));
  }
  const DetectorReport r = flattenings_det(*polygon);
  out.count = r.count;
  out.bound = d + 1;
  out.parity_anomaly = (r.count % 2 == 1) != detail::odd_flattening_parity(*polygon);
  out.record = InstanceRecord{c.kind, i, s, r.count, d + 1, std::move(*polygon), std::nullopt};
  return out;
}

std::string outcome_label(const CampaignReport& r, bool conjecture) {
  const std::string scale = std::to_string(r.instances);
  if (conjecture) {
    if (r.violations.empty()) return "no counterexample found at scale " + scale;
    return std::to_string(r.violations.size()) +
           " candidate counterexample(s) at scale " + scale + ", serialized for audit";
  }
  if (r.violations.empty()) return "all " + scale + " instances satisfy the bound";
  return std::to_string(r.violations.size()) + " violation(s) in " + scale + " instances";
}

}  // namespace

std::string_view kind_name(CampaignKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

std::optional<CampaignKind> parse_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

bool is_conjecture(CampaignKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.conjecture;
  }
  return false;
}

CampaignConfig validated(CampaignConfig c) {
  if (c.trials < 1) invalid("trials must be >= 1");
  if (c.jobs < 1) invalid("jobs must be >= 1");
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t floor = 0;
  switch (c.kind) {
    case CampaignKind::Four: lo = 5; hi = 20; floor = 4; break;
    case CampaignKind::Six: lo = 7; hi = 16; floor = 6; break;
    case CampaignKind::Ghys: lo = 4; hi = 16; floor = 4; break;
    case CampaignKind::Moebius: lo = 4; hi = 10; floor = 3; break;
    case CampaignKind::SegreArea: lo = 6; hi = 16; floor = 6; break;
    case CampaignKind::Barner:
    case CampaignKind::BarnerK:
      if (c.dim < 2) invalid("dimension must be >= 2");
      lo = c.dim + 1;
      hi = c.dim + 6;
      floor = c.dim + 1;
      break;
  }
  if (c.n_min == 0) c.n_min = c.n_max == 0 ? lo : std::min(lo, c.n_max);
  if (c.n_max == 0) c.n_max = std::max(hi, c.n_min);
  if (c.n_min < floor) {
    invalid("n-min " + std::to_string(c.n_min) + " is below the hypothesis bound " +
            std::to_string(floor) + " for " + std::string(kind_name(c.kind)));
  }
  if (c.n_min > c.n_max) invalid("n-min exceeds n-max");
  return c;
}

namespace detail {

bool odd_flattening_parity(const LiftedPolygon& polygon) {
  // Delta_{j+n} = wrap^{d+1} Delta_j, so the cyclic sequence has an odd
  // number of sign changes exactly when that factor is -1.
  return polygon.wrap() == -1 && polygon.dim() % 2 == 0;
}

CampaignReport aggregate(const CampaignConfig& config, std::size_t bound,
                         std::vector<TrialOutcome> outcomes) {
  CampaignReport r;
  r.config = config;
  r.bound = bound;
  bool first = true;
  for (auto& o : outcomes) {
    r.resampled += o.resampled;
    if (o.hypothesis_failed) {
      ++r.excluded;
      continue;
    }
    ++r.instances;
    ++r.histogram[o.count];
    const std::size_t n = std::visit([](const auto& inst) { return inst.size(); },
                                     o.record->instance);
    auto [it, inserted] = r.count_range_by_size.try_emplace(n, o.count, o.count);
    if (!inserted) {
      it->second.first = std::min(it->second.first, o.count);
      it->second.second = std::max(it->second.second, o.count);
    }
    const long margin = static_cast<long>(o.count) - static_cast<long>(o.bound);
    if (first || margin < r.min_margin) {
      r.min_margin = margin;
      r.extremes.clear();
    }
    if (first) {
      r.min_count = r.max_count = o.count;
    } else {
      r.min_count = std::min(r.min_count, o.count);
      r.max_count = std::max(r.max_count, o.count);
    }
    first = false;
    if (margin == r.min_margin && r.extremes.size() < 3) r.extremes.push_back(*o.record);
    if (o.boundary) ++r.boundary_instances;
    if (o.parity_anomaly) ++r.parity_anomalies;
    if (margin < 0) r.violations.push_back(std::move(*o.record));
  }
  if (r.excluded > 0) {
    r.notes.push_back(std::to_string(r.excluded) +
                      " instance(s) excluded: outside the hypothesis class");
  }
  r.outcome = outcome_label(r, is_conjecture(config.kind));
  return r;
}

}  // namespace detail

CampaignReport run_campaign(CampaignConfig config) {
  if (is_conjecture(config.kind)) {
    invalid(std::string(kind_name(config.kind)) + " is a conjecture search");
  }
  const auto c = validated(config);
  const auto start = std::chrono::steady_clock::now();
  std::vector<detail::TrialOutcome> outcomes;
  std::size_t bound = 0;
  std::vector<std::string> notes;
  switch (c.kind) {
    case CampaignKind::Four:
      bound = 4;
      outcomes = detail::run_trials(c.trials, c.jobs, [&](std::size_t i) {
        return planar_trial(c, i, 4, [](const PlanarConvexPolygon& p) {
          return extremal_triples(p);
        });
      });
      break;
    case CampaignKind::Six:
      bound = 6;
      outcomes = detail::run_trials(c.trials, c.jobs, [&](std::size_t i) {
        return planar_trial(c, i, 6, [](const PlanarConvexPolygon& p) {
          return extremal_quintuples(p);
        });
      });
      break;
    case CampaignKind::Ghys:
      bound = 4;
      outcomes = detail::run_trials(c.trials, c.jobs,
                                    [&](std::size_t i) { return ghys_trial(c, i); });
      break;
    case CampaignKind::Barner: {
      bound = c.dim + 1;
      outcomes = detail::run_trials(c.trials, c.jobs,
                                    [&](std::size_t i) { return barner_trial(c, i); });
      const auto perturbed = std::count_if(outcomes.begin(), outcomes.end(),
                                           [](const auto& o) { return o.perturbed; });
      notes.push_back(std::to_string(perturbed) +
                      " instance(s) perturbed off the moment curve, all others moment "
                      "polygons under a random projective map");
      break;
    }
    default:
      break;
  }
  auto report = detail::aggregate(c, bound, std::move(outcomes));
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
  if (c.kind == CampaignKind::Barner && binomial(c.n_max, c.dim - 1) > kStrictConvexityBudget) {
    report.notes.push_back("strict convexity verified only where C(n, d-1) <= " +
                           std::to_string(kStrictConvexityBudget));
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

Reverification reverify(const InstanceRecord& record) {
  Reverification v;
  try {
    std::size_t bound = record.bound;
    switch (record.kind) {
      case CampaignKind::Four:
      case CampaignKind::Six: {
        const auto& p = std::get<PlanarConvexPolygon>(record.instance);
        // Re-validate from raw vertices rather than trusting the object.
        const auto fresh = PlanarConvexPolygon::make(p.vertices(), OrientationPolicy::Reject);
        v.hypothesis_holds = fresh.size() >= (record.kind == CampaignKind::Four ? 4u : 6u);
        v.recomputed = record.kind == CampaignKind::Four ? extremal_triples(fresh).count
                                                         : extremal_quintuples(fresh).count;
        bound = record.kind == CampaignKind::Four ? 4 : 6;
        break;
      }
      case CampaignKind::Ghys: {
        const auto& t = std::get<PairTuples>(record.instance);
        v.hypothesis_holds = t.size() >= 4;
        v.recomputed = ghys_extremal_triples(t).count;
        bound = 4;
        break;
      }
      case CampaignKind::Barner: {
        const auto& p = std::get<LiftedPolygon>(record.instance);
        v.hypothesis_holds = p.dim() >= 2 && is_strictly_convex(p).strictly_convex;
        v.recomputed = flattenings_det(p).count;
        bound = p.dim() + 1;
        break;
      }
      case CampaignKind::Moebius: {
        const auto& p = std::get<LiftedPolygon>(record.instance);
        v.hypothesis_holds = p.dim() == 2 && p.wrap() == -1 && p.in_general_position() &&
                             is_embedded_projective(p);
        v.recomputed = flattenings_det(p).count;
        bound = 3;
        break;
      }
      case CampaignKind::SegreArea: {
        const auto& p = std::get<LiftedPolygon>(record.instance);
        v.hypothesis_holds = p.dim() == 2 && on_unit_sphere(p) && is_antipodally_symmetric(p) &&
                             is_embedded_spherical(p);
        v.recomputed = flattenings_det(p).count;
        bound = 4;
        break;
      }
      case CampaignKind::BarnerK: {
        const auto& p = std::get<LiftedPolygon>(record.instance);
        v.hypothesis_holds = p.dim() >= 2 && record.hyperplane.has_value() &&
                             is_strictly_convex(p).strictly_convex;
        v.recomputed = flattenings_det(p).count;
        if (record.hyperplane) {
          bound = static_cast<std::size_t>(multiplicity(p, *record.hyperplane).value);
        }
        break;
      }
    }
    v.matches_record = v.recomputed == record.count && bound == record.bound;
    v.satisfies_bound = v.recomputed >= bound;
  } catch (const std::exception&) {
    v = Reverification{};
  }
  return v;
}

}  // namespace vertexlab
