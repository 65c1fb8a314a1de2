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

#include "vertexlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "vertexlab/detectors.hpp"
#include "vertexlab/embeddings.hpp"

namespace vertexlab {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 60.0;
constexpr int kConicSamples = 720;
constexpr int kGraphSamples = 600;

const char* const kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double min_x, min_y, scale;
  double x(double v) const { return kMargin + (v - min_x) * scale; }
  // SVG y grows downwards.
  double y(double v) const { return kSize - kMargin - (v - min_y) * scale; }
};

Frame frame_for(const std::vector<std::pair<double, double>>& pts) {
  double lo_x = pts[0].first, hi_x = lo_x, lo_y = pts[0].second, hi_y = lo_y;
  for (const auto& [x, y] : pts) {
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  // Center the shorter side.
  const double cx = (lo_x + hi_x) / 2;
  const double cy = (lo_y + hi_y) / 2;
  return {cx - span / 2, cy - span / 2, scale};
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" "
         "height=\"800\">\n<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
}

// Rational direction close to angle phi.
Vec rational_direction(double phi) {
  const long den = 4096;
  return {ratio(std::lround(std::cos(phi) * den), den),
          ratio(std::lround(std::sin(phi) * den), den)};
}

// Second intersection of the conic with lines through a point on it: exact
// rational points V + s d with s = -2 B(V, d) / Q(d).
std::vector<std::pair<double, double>> conic_samples(const Conic& conic, const Point2& v) {
  const Matrix& q = conic.matrix();
  std::vector<std::pair<double, double>> out;
  const Vec base{v.x, v.y, Scalar(1)};
  for (int k = 0; k < kConicSamples; ++k) {
    const Vec d2 = rational_direction(std::numbers::pi * k / kConicSamples);
    const Vec d{d2[0], d2[1], Scalar(0)};
    Scalar b = 0;
    Scalar qd = 0;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        b += base[r] * q[r][c] * d[c];
        qd += d[r] * q[r][c] * d[c];
      }
    }
    if (sgn(qd) == 0) continue;  // asymptotic direction
    const Scalar s = -2 * b / qd;
    out.emplace_back(Scalar(v.x + s * d[0]).get_d(), Scalar(v.y + s * d[1]).get_d());
  }
  return out;
}

std::string polyline(const std::vector<std::pair<double, double>>& pts, const Frame& f,
                     const std::string& stroke, double limit) {
  std::string out;
  std::string current;
  std::size_t points = 0;
  auto flush = [&] {
    if (points >= 2) {
      out += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\" points=\"" +
             current + "\"/>\n";
    }
    current.clear();
    points = 0;
  };
  std::pair<double, double> prev{0, 0};
  for (const auto& [x, y] : pts) {
    const double sx = f.x(x);
    const double sy = f.y(y);
    const bool inside = std::abs(sx) < limit && std::abs(sy) < limit;
    if (!inside || (points > 0 && std::hypot(sx - prev.first, sy - prev.second) > kSize / 4)) {
      flush();
    }
    if (!inside) continue;
    if (points > 0) current += ' ';
    current += fmt(sx) + "," + fmt(sy);
    ++points;
    prev = {sx, sy};
  }
  flush();
  return out;
}

// Position of a point of RP^1 on [0, 1), increasing with the affine coordinate.
double line_coordinate(const Vec& p) {
  double theta = std::atan2(p[1].get_d(), p[0].get_d());
  if (theta < 0) theta += std::numbers::pi;
  if (theta >= std::numbers::pi) theta -= std::numbers::pi;
  double s = 1.0 - theta / std::numbers::pi;
  if (s >= 1.0) s -= 1.0;
  return s;
}

double torus_x(double s) { return kMargin + s * (kSize - 2 * kMargin); }
double torus_y(double t) { return kSize - kMargin - t * (kSize - 2 * kMargin); }

}  // namespace

std::string render_planar_svg(const PlanarConvexPolygon& polygon, SvgHighlight highlight) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : polygon.vertices()) pts.emplace_back(v.x.get_d(), v.y.get_d());
  const Frame f = frame_for(pts);
  std::string svg = header();
  svg += "<clipPath id=\"frame\"><rect width=\"800\" height=\"800\"/></clipPath>\n";
  svg += "<g clip-path=\"url(#frame)\">\n";

  DetectorReport report;
  if (highlight == SvgHighlight::ExtremalTriples) report = extremal_triples(polygon);
  if (highlight == SvgHighlight::ExtremalQuintuples) report = extremal_quintuples(polygon);
  const long n = static_cast<long>(polygon.size());

  for (std::size_t k = 0; k < report.positions.size(); ++k) {
    const long i = static_cast<long>(report.positions[k]);
    const std::string color = kPalette[k % std::size(kPalette)];
    if (highlight == SvgHighlight::ExtremalTriples) {
      const auto& a = pts[static_cast<std::size_t>(i % n)];
      const auto& b = pts[static_cast<std::size_t>((i + 1) % n)];
      const auto& c = pts[static_cast<std::size_t>((i + 2) % n)];
      const double d = 2 * (a.first * (b.second - c.second) + b.first * (c.second - a.second) +
                            c.first * (a.second - b.second));
      const double a2 = a.first * a.first + a.second * a.second;
      const double b2 = b.first * b.first + b.second * b.second;
      const double c2 = c.first * c.first + c.second * c.second;
      const double ux = (a2 * (b.second - c.second) + b2 * (c.second - a.second) +
                         c2 * (a.second - b.second)) / d;
      const double uy = (a2 * (c.first - b.first) + b2 * (a.first - c.first) +
                         c2 * (b.first - a.first)) / d;
      const double r = std::hypot(a.first - ux, a.second - uy);
      svg += "<circle cx=\"" + fmt(f.x(ux)) + "\" cy=\"" + fmt(f.y(uy)) + "\" r=\"" +
             fmt(r * f.scale) + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\" stroke-opacity=\"0.7\"/>\n";
    } else {
      std::vector<Vec> five;
      for (long t = 0; t < 5; ++t) five.push_back(polygon.lift(i + t));
      const Conic conic = conic_through(five);
      svg += polyline(conic_samples(conic, polygon.vertex(i)), f, color, 4 * kSize);
    }
  }

  std::string points;
  for (const auto& [x, y] : pts) {
    if (!points.empty()) points += ' ';
    points += fmt(f.x(x)) + "," + fmt(f.y(y));
  }
  svg += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" + points +
         "\"/>\n";
  const std::size_t span = highlight == SvgHighlight::ExtremalQuintuples ? 5 : 3;
  std::vector<bool> marked(pts.size(), false);
  for (auto i : report.positions) {
    for (std::size_t t = 0; t < span; ++t) marked[(i + t) % pts.size()] = true;
  }
  for (std::size_t j = 0; j < pts.size(); ++j) {
    svg += "<circle cx=\"" + fmt(f.x(pts[j].first)) + "\" cy=\"" + fmt(f.y(pts[j].second)) +
           "\" r=\"4\" fill=\"" + (marked[j] ? "#d62728" : "black") + "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string render_torus_svg(const PairTuples& tuples, bool highlight_extremal) {
  const long n = static_cast<long>(tuples.size());
  std::string svg = header();
  const std::string side = fmt(kSize - 2 * kMargin);
  svg += "<clipPath id=\"torus\"><rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) +
         "\" width=\"" + side + "\" height=\"" + side + "\"/></clipPath>\n";
  svg += "<rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) + "\" width=\"" + side +
         "\" height=\"" + side + "\" fill=\"none\" stroke=\"gray\"/>\n";
  svg += "<g clip-path=\"url(#torus)\">\n";

  if (highlight_extremal) {
    const DetectorReport report = ghys_extremal_triples(tuples);
    for (std::size_t k = 0; k < report.positions.size(); ++k) {
      const long i = static_cast<long>(report.positions[k]);
      const ProjMap m = mobius_through({tuples.x(i), tuples.x(i + 1), tuples.x(i + 2)},
                                       {tuples.y(i), tuples.y(i + 1), tuples.y(i + 2)});
      std::vector<std::pair<double, double>> graph;
      for (int s = 0; s < kGraphSamples; ++s) {
        const double p[2] = {std::cos(std::numbers::pi * s / kGraphSamples),
                        std::sin(std::numbers::pi * s / kGraphSamples)};
        const Vec p_exact{Scalar(p[0]), Scalar(p[1])};
        graph.emplace_back(line_coordinate(p_exact), line_coordinate(m.apply(p_exact)));
      }
      std::sort(graph.begin(), graph.end());
      const std::string color = kPalette[k % std::size(kPalette)];
      std::string current;
      double prev_t = -1;
      auto flush = [&] {
        if (!current.empty()) {
          svg += "<polyline fill=\"none\" stroke=\"" + color +
                 "\" stroke-width=\"1.2\" stroke-opacity=\"0.6\" points=\"" + current + "\"/>\n";
        }
        current.clear();
      };
      for (const auto& [s, t] : graph) {
        if (prev_t >= 0 && std::abs(t - prev_t) > 0.5) flush();
        if (!current.empty()) current += ' ';
        current += fmt(torus_x(s)) + "," + fmt(torus_y(t));
        prev_t = t;
      }
      flush();
    }
  }

  // Each edge runs in the positive direction of both factors; draw it in the
  // universal cover and repeat the translates that meet the unit square.
  for (long j = 0; j < n; ++j) {
    const double s0 = line_coordinate(tuples.x(j));
    const double t0 = line_coordinate(tuples.y(j));
    double s1 = line_coordinate(tuples.x(j + 1));
    double t1 = line_coordinate(tuples.y(j + 1));
    if (s1 <= s0) s1 += 1;
    if (t1 <= t0) t1 += 1;
    for (int dx = -1; dx <= 0; ++dx) {
      for (int dy = -1; dy <= 0; ++dy) {
        svg += "<line x1=\"" + fmt(torus_x(s0 + dx)) + "\" y1=\"" + fmt(torus_y(t0 + dy)) +
               "\" x2=\"" + fmt(torus_x(s1 + dx)) + "\" y2=\"" + fmt(torus_y(t1 + dy)) +
               "\" stroke=\"black\" stroke-width=\"2\"/>\n";
      }
    }
  }
  for (long j = 0; j < n; ++j) {
    svg += "<circle cx=\"" + fmt(torus_x(line_coordinate(tuples.x(j)))) + "\" cy=\"" +
           fmt(torus_y(line_coordinate(tuples.y(j)))) + "\" r=\"4\" fill=\"black\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace vertexlab
