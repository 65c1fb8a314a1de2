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

#include "vertexlab/io.hpp"

#include <cstdio>
#include <optional>

#include "vertexlab/error.hpp"

namespace vertexlab {

namespace {

// A parse failure tied to a literal of the source text, so read_input can
// report where it sits.
class LiteralError : public GeometryError {
 public:
  LiteralError(std::string literal, const std::string& what)
      : GeometryError(ErrorCode::ParseError, what), literal_(std::move(literal)) {}
  const std::string& literal() const { return literal_; }

 private:
  std::string literal_;
};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw GeometryError(ErrorCode::ParseError, path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

Scalar scalar_at(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    try {
      return parse_scalar(text);
    } catch (const GeometryError& e) {
      throw LiteralError(j.dump(), path + ": " + e.detail());
    }
  }
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump(), 10));
  if (j.is_number()) {
    throw LiteralError(j.dump(), path + ": non-integer number " + j.dump() +
                                     "; write rationals as \"p/q\" strings");
  }
  fail(path, "expected a rational");
}

Vec vec_at(const Json& j, const std::string& path) {
  array_at(j, path);
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(scalar_at(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return v;
}

long integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::uint64_t unsigned_at(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

LiftedPolygon polygon_at(const Json& j, const std::string& path) {
  const long dim = integer_at(member(j, "dim", path), path + ".dim");
  const long wrap = integer_at(member(j, "wrap", path), path + ".wrap");
  if (dim < 1) fail(path + ".dim", "must be >= 1");
  const Json& lifts = array_at(member(j, "lifts", path), path + ".lifts");
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    vs.push_back(vec_at(lifts[i], path + ".lifts[" + std::to_string(i) + "]"));
  }
  return LiftedPolygon(static_cast<std::size_t>(dim), std::move(vs), static_cast<int>(wrap));
}

std::vector<HPoint> points_at(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<HPoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    Vec v = vec_at(j[i], p);
    if (v.size() != 2) fail(p, "expected two homogeneous coordinates");
    if (is_zero(v)) fail(p, "zero vector");
    out.emplace_back(std::move(v));
  }
  return out;
}

PairTuples pairs_at(const Json& j, const std::string& path) {
  return make_pair_tuples(points_at(member(j, "x", path), path + ".x"),
                          points_at(member(j, "y", path), path + ".y"));
}

bool is_pair_file(const Json& j) {
  if (!j.is_object()) return false;
  auto it = j.find("kind");
  return it != j.end() && it->is_string() && *it == "pair_tuples";
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string located(std::string_view source, std::string_view text, std::size_t offset) {
  auto [line, col] = line_column(text, offset);
  return std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": ";
}

Json positions_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

CampaignKind kind_at(const Json& j, const std::string& path) {
  auto kind = parse_kind(string_at(j, path));
  if (!kind) fail(path, "unknown campaign kind " + j.dump());
  return *kind;
}

}  // namespace

Json to_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from_json(const Json& j) { return scalar_at(j, "$"); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const Json& j) { return vec_at(j, "$"); }

Json to_json(const LiftedPolygon& polygon) {
  Json lifts = Json::array();
  for (const auto& v : polygon.lifts()) lifts.push_back(to_json(v));
  return Json{{"dim", polygon.dim()}, {"wrap", polygon.wrap()}, {"lifts", lifts}};
}

LiftedPolygon polygon_from_json(const Json& j) { return polygon_at(j, "$"); }

Json to_json(const PlanarConvexPolygon& polygon) { return to_json(make_planar(polygon)); }

PlanarConvexPolygon planar_from_polygon(const LiftedPolygon& polygon) {
  if (polygon.dim() != 2) {
    throw GeometryError(ErrorCode::UnsupportedDimension, "planar input must have dim 2");
  }
  if (polygon.wrap() != 1) {
    throw GeometryError(ErrorCode::DegenerateInput, "planar input must have wrap +1");
  }
  std::vector<Point2> pts;
  for (const auto& v : polygon.lifts()) {
    if (sgn(v[2]) == 0) {
      throw GeometryError(ErrorCode::DegenerateInput, "vertex at infinity in planar input");
    }
    pts.push_back({v[0] / v[2], v[1] / v[2]});
  }
  return PlanarConvexPolygon::make(std::move(pts));
}

Json to_json(const PairTuples& tuples) {
  Json xs = Json::array();
  Json ys = Json::array();
  for (const auto& v : tuples.xs()) xs.push_back(to_json(v));
  for (const auto& v : tuples.ys()) ys.push_back(to_json(v));
  return Json{{"kind", "pair_tuples"}, {"x", xs}, {"y", ys}};
}

PairTuples pair_tuples_from_json(const Json& j) { return pairs_at(j, "$"); }

InputFile read_input(std::string_view text, std::string_view source) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    throw GeometryError(ErrorCode::ParseError, located(source, text, offset) + what);
  }
  try {
    if (is_pair_file(j)) return pairs_at(j, "$");
    return polygon_at(j, "$");
  } catch (const LiteralError& e) {
    const auto pos = text.find(e.literal());
    const std::size_t offset = pos == std::string_view::npos ? 0 : pos;
    throw GeometryError(ErrorCode::ParseError,
                        located(source, text, offset) + e.detail());
  } catch (const GeometryError& e) {
    throw GeometryError(e.code(), std::string(source) + ": " + e.detail());
  }
}

Json to_json(const DetectorReport& report, std::string_view detector) {
  return Json{{"detector", detector},
              {"positions", positions_json(report.positions)},
              {"count", report.count},
              {"boundary_hits", positions_json(report.boundary_hits)}};
}

Json to_json(const MultiplicityResult& result) {
  Json chains = Json::array();
  for (const auto& c : result.degenerate_chains) {
    chains.push_back(Json{{"start", c.start}, {"length", c.length}});
  }
  return Json{{"multiplicity", result.value}, {"degenerate_chains", chains}};
}

Json to_json(const StrictConvexity& result) {
  Json witnesses = Json::array();
  for (const auto& [subset, h] : result.witnesses) {
    witnesses.push_back(
        Json{{"subset", positions_json(subset)}, {"hyperplane", to_json(h.covector())}});
  }
  Json out{{"strictly_convex", result.strictly_convex}, {"witnesses", witnesses}};
  if (result.failing_subset) {
    out["failing_subset"] = positions_json(*result.failing_subset);
    out["failing_multiplicity"] = result.failing_multiplicity;
  } else {
    out["failing_subset"] = nullptr;
  }
  return out;
}

Json to_json(const Reverification& r) {
  return Json{{"recomputed", r.recomputed},
              {"matches_record", r.matches_record},
              {"satisfies_bound", r.satisfies_bound},
              {"hypothesis_holds", r.hypothesis_holds}};
}

Json to_json(const SchwarzianTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"epsilon", r.epsilon}, {"value", r.value}, {"residual", r.residual}});
  }
  return Json{{"function", table.function == TestFunction::Cubic ? "x + x^3" : "x / (1 + x)"},
              {"schwarzian_at_zero", table.schwarzian_at_zero},
              {"rows", rows}};
}

Json to_json(const CampaignConfig& c) {
  return Json{{"kind", kind_name(c.kind)}, {"trials", c.trials}, {"n_min", c.n_min},
              {"n_max", c.n_max},         {"dim", c.dim},       {"seed", c.seed},
              {"strict", c.strict},       {"jobs", c.jobs}};
}

CampaignConfig config_from_json(const Json& j) {
  const std::string p = "$.config";
  CampaignConfig c;
  c.kind = kind_at(member(j, "kind", p), p + ".kind");
  c.trials = unsigned_at(member(j, "trials", p), p + ".trials");
  c.n_min = unsigned_at(member(j, "n_min", p), p + ".n_min");
  c.n_max = unsigned_at(member(j, "n_max", p), p + ".n_max");
  c.dim = unsigned_at(member(j, "dim", p), p + ".dim");
  c.seed = unsigned_at(member(j, "seed", p), p + ".seed");
  const Json& strict = member(j, "strict", p);
  if (!strict.is_boolean()) fail(p + ".strict", "expected a boolean");
  c.strict = strict.get<bool>();
  c.jobs = unsigned_at(member(j, "jobs", p), p + ".jobs");
  return c;
}

Json to_json(const InstanceRecord& r) {
  Json out{{"kind", kind_name(r.kind)}, {"trial", r.trial}, {"seed", r.seed},
           {"count", r.count},          {"bound", r.bound}};
  out["instance"] = std::visit([](const auto& inst) { return to_json(inst); }, r.instance);
  if (r.hyperplane) out["hyperplane"] = to_json(r.hyperplane->covector());
  return out;
}

InstanceRecord record_from_json(const Json& j) {
  const std::string p = "$";
  const CampaignKind kind = kind_at(member(j, "kind", p), p + ".kind");
  const Json& inst = member(j, "instance", p);
  auto instance = [&]() -> Instance {
    switch (kind) {
      case CampaignKind::Four:
      case CampaignKind::Six:
        return planar_from_polygon(polygon_at(inst, p + ".instance"));
      case CampaignKind::Ghys:
        return pairs_at(inst, p + ".instance");
      default:
        return polygon_at(inst, p + ".instance");
    }
  }();
  InstanceRecord r{kind,
                   unsigned_at(member(j, "trial", p), p + ".trial"),
                   unsigned_at(member(j, "seed", p), p + ".seed"),
                   unsigned_at(member(j, "count", p), p + ".count"),
                   unsigned_at(member(j, "bound", p), p + ".bound"),
                   std::move(instance),
                   std::nullopt};
  if (j.contains("hyperplane")) r.hyperplane = Hyperplane(vec_at(j["hyperplane"], p + ".hyperplane"));
  return r;
}

Json to_json(const CampaignReport& r) {
  Json histogram = Json::array();
  for (const auto& [count, k] : r.histogram) {
    histogram.push_back(Json{{"count", count}, {"instances", k}});
  }
  Json by_size = Json::array();
  for (const auto& [n, range] : r.count_range_by_size) {
    by_size.push_back(Json{{"n", n}, {"min", range.first}, {"max", range.second}});
  }
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  Json extremes = Json::array();
  for (const auto& v : r.extremes) extremes.push_back(to_json(v));
  return Json{{"config", to_json(r.config)},
              {"outcome", r.outcome},
              {"instances", r.instances},
              {"bound", r.bound},
              {"min_count", r.min_count},
              {"max_count", r.max_count},
              {"min_margin", r.min_margin},
              {"histogram", histogram},
              {"count_range_by_size", by_size},
              {"violations", violations},
              {"extremes", extremes},
              {"boundary", Json{{"instances", r.boundary_instances}, {"resampled", r.resampled}}},
              {"parity_anomalies", r.parity_anomalies},
              {"excluded", r.excluded},
              {"notes", r.notes},
              {"wall_time_ms", r.wall_time_ms}};
}

CampaignReport report_from_json(const Json& j) {
  const std::string p = "$";
  CampaignReport r;
  r.config = config_from_json(member(j, "config", p));
  r.outcome = string_at(member(j, "outcome", p), p + ".outcome");
  r.instances = unsigned_at(member(j, "instances", p), p + ".instances");
  r.bound = unsigned_at(member(j, "bound", p), p + ".bound");
  r.min_count = unsigned_at(member(j, "min_count", p), p + ".min_count");
  r.max_count = unsigned_at(member(j, "max_count", p), p + ".max_count");
  r.min_margin = integer_at(member(j, "min_margin", p), p + ".min_margin");
  for (const auto& h : array_at(member(j, "histogram", p), p + ".histogram")) {
    r.histogram[unsigned_at(member(h, "count", p), p)] = unsigned_at(member(h, "instances", p), p);
  }
  for (const auto& s : array_at(member(j, "count_range_by_size", p), p)) {
    r.count_range_by_size[unsigned_at(member(s, "n", p), p)] = {
        unsigned_at(member(s, "min", p), p), unsigned_at(member(s, "max", p), p)};
  }
  for (const auto& v : array_at(member(j, "violations", p), p)) {
    r.violations.push_back(record_from_json(v));
  }
  for (const auto& v : array_at(member(j, "extremes", p), p)) {
    r.extremes.push_back(record_from_json(v));
  }
  const Json& boundary = member(j, "boundary", p);
  r.boundary_instances = unsigned_at(member(boundary, "instances", p), p);
  r.resampled = unsigned_at(member(boundary, "resampled", p), p);
  r.parity_anomalies = unsigned_at(member(j, "parity_anomalies", p), p);
  r.excluded = unsigned_at(member(j, "excluded", p), p);
  for (const auto& n : array_at(member(j, "notes", p), p)) r.notes.push_back(string_at(n, p));
  const Json& wall = member(j, "wall_time_ms", p);
  if (!wall.is_number()) fail(p + ".wall_time_ms", "expected a number");
  r.wall_time_ms = wall.get<double>();
  return r;
}

ReportEnvelope make_envelope(std::vector<std::string> command, std::string_view input,
                             Json payload) {
  return ReportEnvelope{std::string(kToolName), std::string(kToolVersion), std::move(command),
                        fnv1a_hex(input), std::move(payload)};
}

Json to_json(const ReportEnvelope& e) {
  return Json{{"tool", e.tool},
              {"version", e.version},
              {"command", e.command},
              {"input_digest", e.input_digest},
              {"payload", e.payload}};
}

ReportEnvelope envelope_from_json(const Json& j) {
  const std::string p = "$";
  ReportEnvelope e;
  e.tool = string_at(member(j, "tool", p), p + ".tool");
  e.version = string_at(member(j, "version", p), p + ".version");
  for (const auto& c : array_at(member(j, "command", p), p + ".command")) {
    e.command.push_back(string_at(c, p + ".command"));
  }
  e.input_digest = string_at(member(j, "input_digest", p), p + ".input_digest");
  e.payload = member(j, "payload", p);
  return e;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vertexlab
