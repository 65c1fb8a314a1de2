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

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "vertexlab/campaigns.hpp"
#include "vertexlab/detectors.hpp"
#include "vertexlab/incidence.hpp"
#include "vertexlab/polygon.hpp"

namespace vertexlab {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "vertexlab";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Rationals cross every JSON boundary as "p/q" strings. Integer JSON numbers
// are accepted on input; other numbers are rejected so no float slips in.
Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);
Json to_json(const Vec& v);
Vec vec_from_json(const Json& j);

// Polygon file: {"dim": d, "wrap": +-1, "lifts": [[...], ...]}.
Json to_json(const LiftedPolygon& polygon);
LiftedPolygon polygon_from_json(const Json& j);
// Planar polygons are written as polygon files with lifts (x, y, 1).
Json to_json(const PlanarConvexPolygon& polygon);
// Requires dim 2, wrap +1 and nonzero last coordinates.
PlanarConvexPolygon planar_from_polygon(const LiftedPolygon& polygon);
// Pair tuples file: {"kind": "pair_tuples", "x": [[a, b], ...], "y": [...]}.
Json to_json(const PairTuples& tuples);
PairTuples pair_tuples_from_json(const Json& j);

using InputFile = std::variant<LiftedPolygon, PairTuples>;

// Parses and validates an input file. Failures are ParseError (or the
// validating constructor's code) with a "source:line:column: " prefix.
InputFile read_input(std::string_view text, std::string_view source);

Json to_json(const DetectorReport& report, std::string_view detector);
Json to_json(const MultiplicityResult& result);
Json to_json(const StrictConvexity& result);
Json to_json(const Reverification& result);
Json to_json(const SchwarzianTable& table);

Json to_json(const CampaignConfig& config);
CampaignConfig config_from_json(const Json& j);
Json to_json(const InstanceRecord& record);
InstanceRecord record_from_json(const Json& j);
Json to_json(const CampaignReport& report);
CampaignReport report_from_json(const Json& j);

struct ReportEnvelope {
  std::string tool;
  std::string version;
  std::vector<std::string> command;
  std::string input_digest;
  Json payload;
  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

ReportEnvelope make_envelope(std::vector<std::string> command, std::string_view input,
                             Json payload);
Json to_json(const ReportEnvelope& envelope);
ReportEnvelope envelope_from_json(const Json& j);

// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace vertexlab
