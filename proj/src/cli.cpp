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

#include "vertexlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vertexlab/campaigns.hpp"
#include "vertexlab/detectors.hpp"
#include "vertexlab/error.hpp"
#include "vertexlab/incidence.hpp"
#include "vertexlab/io.hpp"
#include "vertexlab/svg.hpp"

namespace vertexlab {

namespace {

struct CampaignOptions {
  std::string kind;
  std::size_t trials = 100;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t dim = 3;
  std::optional<std::uint64_t> seed;
  bool strict = false;
  std::size_t jobs = 1;
};

struct AnalyzeOptions {
  std::string file;
  bool flattenings = false;
  bool flattenings_sep = false;
  bool triples = false;
  bool quintuples = false;
  bool ghys = false;
  bool strictly_convex = false;
  std::string multiplicity;
};

struct Output {
  std::string path;
  std::ostream* stdout_stream;

  void write(const std::string& text) const {
    if (path.empty()) {
      *stdout_stream << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw GeometryError(ErrorCode::ConfigInvalid, "cannot write " + path);
    f << text;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw GeometryError(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("VERTEXLAB_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') {
      throw GeometryError(ErrorCode::ConfigInvalid, "VERTEXLAB_SEED is not an integer");
    }
    return v;
  }
  return 1;
}

void add_campaign_flags(CLI::App* cmd, CampaignOptions& o) {
  cmd->add_option("kind", o.kind, "campaign kind")->required();
  cmd->add_option("--trials", o.trials, "number of trials");
  cmd->add_option("--n-min", o.n_min, "smallest polygon size");
  cmd->add_option("--n-max", o.n_max, "largest polygon size");
  cmd->add_option("--dim", o.dim, "dimension d (barner kinds)");
  cmd->add_option("--seed", o.seed, "64-bit seed (default: VERTEXLAB_SEED or 1)");
  cmd->add_flag("--strict", o.strict, "resample instances with boundary hits");
  cmd->add_option("--jobs", o.jobs, "worker threads");
}

CampaignConfig to_config(const CampaignOptions& o, bool conjecture) {
  auto kind = parse_kind(o.kind);
  if (!kind || is_conjecture(*kind) != conjecture) {
    throw GeometryError(ErrorCode::ConfigInvalid,
                        "unknown " + std::string(conjecture ? "conjecture" : "campaign") +
                            " kind \"" + o.kind + "\"");
  }
  CampaignConfig c;
  c.kind = *kind;
  c.trials = o.trials;
  c.n_min = o.n_min;
  c.n_max = o.n_max;
  c.dim = o.dim;
  c.seed = o.seed ? *o.seed : default_seed();
  c.strict = o.strict;
  c.jobs = o.jobs;
  return validated(c);
}

int campaign_command(const CampaignOptions& o, bool conjecture,
                     const std::vector<std::string>& args, const Output& out,
                     std::ostream& err) {
  const CampaignConfig config = to_config(o, conjecture);
  const CampaignReport report = conjecture ? search_conjecture(config) : run_campaign(config);
  const auto envelope = make_envelope(args, to_json(config).dump(), to_json(report));
  out.write(to_json(envelope).dump(2) + "\n");
  err << kind_name(config.kind) << ": " << report.outcome << " (min count " << report.min_count
      << ", bound " << report.bound << ", " << report.boundary_instances
      << " with boundary hits, " << report.resampled << " resampled)\n";
  return report.violations.empty() ? kExitOk : kExitViolation;
}

Hyperplane parse_hyperplane(const std::string& text) {
  Vec v;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) v.push_back(parse_scalar(item));
  return Hyperplane(std::move(v));
}

int analyze_command(const AnalyzeOptions& o, const std::vector<std::string>& args,
                    const Output& out) {
  const std::string text = read_file(o.file);
  const InputFile input = read_input(text, o.file);
  Json payload = Json::object();
  if (const auto* tuples = std::get_if<PairTuples>(&input)) {
    if (o.flattenings || o.flattenings_sep || o.triples || o.quintuples || o.strictly_convex ||
        !o.multiplicity.empty()) {
      throw GeometryError(ErrorCode::ConfigInvalid, "pair tuples support --ghys only");
    }
    payload["ghys"] = to_json(ghys_extremal_triples(*tuples), "ghys");
  } else {
    const auto& polygon = std::get<LiftedPolygon>(input);
    const bool any = o.flattenings || o.flattenings_sep || o.triples || o.quintuples ||
                     o.strictly_convex || !o.multiplicity.empty();
    if (o.ghys) throw GeometryError(ErrorCode::ConfigInvalid, "--ghys needs a pair tuples file");
    if (o.flattenings || !any) {
      payload["flattenings"] = to_json(flattenings_det(polygon), "flattenings");
    }
    if (o.flattenings_sep) {
      payload["flattenings_sep"] = to_json(flattenings_sep(polygon), "flattenings_sep");
    }
    if (o.triples || o.quintuples) {
      const auto planar = planar_from_polygon(polygon);
      if (o.triples) {
        payload["extremal_triples"] = to_json(extremal_triples(planar), "extremal_triples");
      }
      if (o.quintuples) {
        payload["extremal_quintuples"] =
            to_json(extremal_quintuples(planar), "extremal_quintuples");
      }
    }
    if (!o.multiplicity.empty()) {
      const Hyperplane h = parse_hyperplane(o.multiplicity);
      payload["multiplicity"] = to_json(multiplicity(polygon, h));
    }
    if (o.strictly_convex) payload["strictly_convex"] = to_json(is_strictly_convex(polygon));
  }
  out.write(to_json(make_envelope(args, text, payload)).dump(2) + "\n");
  return kExitOk;
}

int svg_command(const std::string& file, bool triples, bool quintuples, const Output& out) {
  const std::string text = read_file(file);
  const InputFile input = read_input(text, file);
  if (const auto* tuples = std::get_if<PairTuples>(&input)) {
    out.write(render_torus_svg(*tuples, true));
    return kExitOk;
  }
  const auto& polygon = std::get<LiftedPolygon>(input);
  if (polygon.dim() != 2) {
    throw GeometryError(ErrorCode::UnsupportedDimension, "svg renders planar polygons only");
  }
  const auto planar = planar_from_polygon(polygon);
  const SvgHighlight h = quintuples ? SvgHighlight::ExtremalQuintuples
                         : triples  ? SvgHighlight::ExtremalTriples
                                    : SvgHighlight::None;
  out.write(render_planar_svg(planar, h));
  return kExitOk;
}

int reverify_command(const std::string& file, const std::vector<std::string>& args,
                     const Output& out, std::ostream& err) {
  const std::string text = read_file(file);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GeometryError(ErrorCode::ParseError, file + ": " + e.what());
  }
  std::vector<InstanceRecord> records;
  if (j.contains("payload")) {
    const auto report = report_from_json(envelope_from_json(j).payload);
    records = report.violations;
    records.insert(records.end(), report.extremes.begin(), report.extremes.end());
  } else if (j.is_array()) {
    for (const auto& r : j) records.push_back(record_from_json(r));
  } else {
    records.push_back(record_from_json(j));
  }
  Json results = Json::array();
  bool consistent = true;
  for (const auto& r : records) {
    const Reverification v = reverify(r);
    Json entry = to_json(v);
    entry["kind"] = kind_name(r.kind);
    entry["trial"] = r.trial;
    results.push_back(entry);
    consistent = consistent && v.matches_record && v.hypothesis_holds;
    err << kind_name(r.kind) << " trial " << r.trial << ": recomputed " << v.recomputed
        << (v.matches_record ? " (matches record)" : " (DOES NOT match record)") << "\n";
  }
  out.write(to_json(make_envelope(args, text, Json{{"records", results}})).dump(2) + "\n");
  return consistent ? kExitOk : kExitViolation;
}

int schwarzian_command(const std::vector<double>& eps, const std::string& function,
                       const std::vector<std::string>& args, const Output& out,
                       std::ostream& err) {
  TestFunction f;
  if (function == "cubic") {
    f = TestFunction::Cubic;
  } else if (function == "projective") {
    f = TestFunction::Projective;
  } else {
    throw GeometryError(ErrorCode::ConfigInvalid, "unknown function \"" + function + "\"");
  }
  const SchwarzianTable table = schwarzian_check(eps, f);
  for (const auto& r : table.rows) {
    err << "eps " << r.epsilon << ": " << r.value << " (residual " << r.residual << ")\n";
  }
  std::ostringstream digest;
  for (double e : eps) digest << e << ';';
  out.write(to_json(make_envelope(args, digest.str() + function, to_json(table))).dump(2) +
            "\n");
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete vertex theorems: campaigns, detectors and figures", "vertexlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  std::string out_path;

  CampaignOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run a theorem campaign (four, six, ghys, barner)");
  add_campaign_flags(verify, verify_opts);
  verify->add_option("--out", out_path, "write JSON here instead of stdout");

  CampaignOptions search_opts;
  auto* search =
      app.add_subcommand("search", "search for conjecture counterexamples "
                                   "(moebius, segre_area, barner_k)");
  add_campaign_flags(search, search_opts);
  search->add_option("--out", out_path, "write JSON here instead of stdout");

  AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "run detectors on a polygon or pair tuples file");
  analyze->add_option("file", analyze_opts.file, "input JSON file")->required();
  analyze->add_flag("--flattenings", analyze_opts.flattenings, "determinant flattenings");
  analyze->add_flag("--flattenings-sep", analyze_opts.flattenings_sep,
                    "flattenings by the separation criterion");
  analyze->add_flag("--extremal-triples", analyze_opts.triples, "extremal triples (planar)");
  analyze->add_flag("--extremal-quintuples", analyze_opts.quintuples,
                    "extremal quintuples (planar)");
  analyze->add_flag("--ghys", analyze_opts.ghys, "extremal index triples (pair tuples)");
  analyze->add_flag("--strictly-convex", analyze_opts.strictly_convex,
                    "strict-convexity decision with witnesses");
  analyze->add_option("--multiplicity", analyze_opts.multiplicity,
                      "hyperplane covector, comma separated rationals");
  analyze->add_option("--out", out_path, "write JSON here instead of stdout");

  std::string svg_file;
  bool svg_triples = false;
  bool svg_quintuples = false;
  auto* svg = app.add_subcommand("svg", "render a planar polygon or pair tuples file");
  svg->add_option("file", svg_file, "input JSON file")->required();
  svg->add_flag("--extremal-triples", svg_triples, "highlight extremal triples and circles");
  svg->add_flag("--extremal-quintuples", svg_quintuples,
                "highlight extremal quintuples and conics");
  svg->add_option("--out", out_path, "write SVG here instead of stdout");

  std::string reverify_file;
  auto* rev = app.add_subcommand("reverify", "recompute serialized instances from a report");
  rev->add_option("file", reverify_file, "report, record or record array JSON")->required();
  rev->add_option("--out", out_path, "write JSON here instead of stdout");

  std::vector<double> eps{1e-2, 1e-3, 1e-4};
  std::string function = "cubic";
  auto* schw = app.add_subcommand("schwarzian", "cross-ratio difference quotients");
  schw->add_option("--eps", eps, "decreasing positive epsilons")->delimiter(',');
  schw->add_option("--function", function, "cubic or projective");
  schw->add_option("--out", out_path, "write JSON here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Output output{out_path, &out};
  try {
    if (verify->parsed()) return campaign_command(verify_opts, false, args, output, err);
    if (search->parsed()) return campaign_command(search_opts, true, args, output, err);
    if (analyze->parsed()) return analyze_command(analyze_opts, args, output);
    if (svg->parsed()) return svg_command(svg_file, svg_triples, svg_quintuples, output);
    if (rev->parsed()) return reverify_command(reverify_file, args, output, err);
    if (schw->parsed()) return schwarzian_command(eps, function, args, output, err);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vertexlab
