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

#include "vertexlab/incidence.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "vertexlab/error.hpp"

namespace vertexlab {

namespace {

// Sign sequence of h along a polygon or chain. For polygons the sequence is
// cyclic and `wrap` relates the sign after the last vertex to the first.
struct SignSequence {
  std::vector<int> signs;
  bool closed;
  int wrap;
};

SignSequence signs_of(const LiftedPolygon& p, const Hyperplane& h) {
  if (h.dim() != p.dim()) {
    throw GeometryError(ErrorCode::DimensionMismatch, "hyperplane dimension");
  }
  SignSequence s{{}, true, p.wrap()};
  s.signs.reserve(p.size());
  for (const auto& v : p.lifts()) s.signs.push_back(h.side(v));
  return s;
}

SignSequence signs_of(const OpenChain& c, const Hyperplane& h) {
  if (h.dim() != c.dim) {
    throw GeometryError(ErrorCode::DimensionMismatch, "hyperplane dimension");
  }
  SignSequence s{{}, false, 1};
  s.signs.reserve(c.lifts.size());
  for (const auto& v : c.lifts) s.signs.push_back(h.side(v));
  return s;
}

void check_chain(std::span<const Vec> lifts, std::size_t start, std::size_t length,
                 std::size_t dim) {
  if (length > dim) {
    throw GeometryError(ErrorCode::ChainTooLong,
                        std::to_string(length) + " consecutive vertices from " +
                            std::to_string(start) + " lie on the hyperplane");
  }
  if (length < 2) return;
  Matrix rows;
  const std::size_t n = lifts.size();
  for (std::size_t k = 0; k < length; ++k) rows.push_back(lifts[(start + k) % n]);
  if (rank(std::move(rows)) != length) {
    throw GeometryError(ErrorCode::EdgeInsideHyperplane,
                        "dependent vertices on the hyperplane starting at " +
                            std::to_string(start));
  }
}

int chain_contribution(std::size_t m, int left, int right) {
  const int differ = left != right ? 1 : 0;
  return static_cast<int>((m + 1) % 2 == static_cast<std::size_t>(differ) ? m + 1 : m);
}

MultiplicityResult evaluate(const SignSequence& s, std::span<const Vec> lifts,
                            std::size_t dim) {
  MultiplicityResult out;
  const std::size_t n = s.signs.size();
  if (s.closed) {
    std::size_t first = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (s.signs[j] != 0) {
        first = j;
        break;
      }
    }
    if (first == n) {
      throw GeometryError(ErrorCode::ChainTooLong, "every vertex lies on the hyperplane");
    }
    int prev = s.signs[first];
    std::size_t zeros = 0;
    std::size_t chain_start = 0;
    for (std::size_t step = 1; step <= n; ++step) {
      const std::size_t j = (first + step) % n;
      int cur = s.signs[j];
      if (first + step >= n) cur *= s.wrap;
      if (cur == 0) {
        if (zeros == 0) chain_start = j;
        ++zeros;
        continue;
      }
      if (zeros == 0) {
        out.value += prev != cur ? 1 : 0;
      } else {
        check_chain(lifts, chain_start, zeros, dim);
        out.value += chain_contribution(zeros, prev, cur);
        out.degenerate_chains.push_back({chain_start, zeros});
        zeros = 0;
      }
      prev = cur;
    }
    std::sort(out.degenerate_chains.begin(), out.degenerate_chains.end(),
              [](const ZeroChain& a, const ZeroChain& b) { return a.start < b.start; });
    return out;
  }

  // Open chain.
  std::size_t j = 0;
  while (j < n && s.signs[j] == 0) ++j;
  if (j == n) {
    check_chain(lifts, 0, n, dim);
    out.value = n == 0 ? 0 : static_cast<int>(n - 1);
    if (n) out.degenerate_chains.push_back({0, n});
    return out;
  }
  if (j > 0) {
    check_chain(lifts, 0, j, dim);
    out.value += static_cast<int>(j);
    out.degenerate_chains.push_back({0, j});
  }
  int prev = s.signs[j];
  std::size_t zeros = 0;
  std::size_t chain_start = 0;
  for (++j; j < n; ++j) {
    const int cur = s.signs[j];
    if (cur == 0) {
      if (zeros == 0) chain_start = j;
      ++zeros;
      continue;
    }
    if (zeros == 0) {
      out.value += prev != cur ? 1 : 0;
    } else {
      check_chain(lifts, chain_start, zeros, dim);
      out.value += chain_contribution(zeros, prev, cur);
      out.degenerate_chains.push_back({chain_start, zeros});
      zeros = 0;
    }
    prev = cur;
  }
  if (zeros > 0) {
    check_chain(lifts, chain_start, zeros, dim);
    out.value += static_cast<int>(zeros);
    out.degenerate_chains.push_back({chain_start, zeros});
  }
  return out;
}

Transversality classify(const SignSequence& s) {
  const std::size_t n = s.signs.size();
  bool any_zero = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (s.signs[j] != 0) continue;
    any_zero = true;
    if (!s.closed && (j == 0 || j + 1 == n)) return Transversality::NotTransverse;
    int left = s.signs[(j + n - 1) % n];
    int right = s.signs[(j + 1) % n];
    if (s.closed && j == 0) left *= s.wrap;
    if (s.closed && j + 1 == n) right *= s.wrap;
    if (left == 0 || right == 0 || left == right) return Transversality::NotTransverse;
  }
  return any_zero ? Transversality::TransverseAtVertex : Transversality::Transverse;
}

}  // namespace

OpenChain chain_of(const LiftedPolygon& polygon, long start, std::size_t count) {
  return OpenChain{polygon.dim(), polygon.window(start, count)};
}

Transversality transverse(const LiftedPolygon& polygon, const Hyperplane& h) {
  return classify(signs_of(polygon, h));
}

Transversality transverse(const OpenChain& chain, const Hyperplane& h) {
  return classify(signs_of(chain, h));
}

MultiplicityResult multiplicity(const LiftedPolygon& polygon, const Hyperplane& h) {
  return evaluate(signs_of(polygon, h), polygon.lifts(), polygon.dim());
}

MultiplicityResult multiplicity(const OpenChain& chain, const Hyperplane& h) {
  return evaluate(signs_of(chain, h), chain.lifts, chain.dim);
}

int multiplicity_sampled(const LiftedPolygon& polygon, const Hyperplane& h,
                         std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw GeometryError(ErrorCode::InvalidTrials, "trials must be >= 1");
  const std::size_t n = polygon.size();
  const std::size_t dim = polygon.dim();
  std::vector<Scalar> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = h.evaluate(polygon.base(static_cast<long>(j)));

  // Reject runs longer than d on h, scanning cyclically.
  std::size_t run = 0;
  std::size_t longest = 0;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    run = sgn(values[step % n]) == 0 ? run + 1 : 0;
    longest = std::max(longest, run);
  }
  if (longest > dim) {
    throw GeometryError(ErrorCode::ChainTooLong, "more than d consecutive vertices on h");
  }

  Scalar min_abs = -1;
  for (const auto& v : values) {
    if (sgn(v) != 0 && (min_abs < 0 || abs(v) < min_abs)) min_abs = abs(v);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-(1L << 20), 1L << 20);
  int best = -1;
  for (std::size_t t = 0; t < trials; ++t) {
    Vec g(dim + 1);
    for (auto& c : g) c = Scalar(coeff(rng));
    std::vector<Scalar> gv(n);
    Scalar gmax = 0;
    for (std::size_t j = 0; j < n; ++j) {
      gv[j] = dot(g, polygon.base(static_cast<long>(j)));
      gmax = std::max(gmax, Scalar(abs(gv[j])));
    }
    const Scalar delta = min_abs / (2 * gmax + 1);
    std::vector<int> s(n);
    bool on_plane = false;
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = sgn(values[j] + delta * gv[j]);
      if (s[j] == 0) on_plane = true;
    }
    if (on_plane) continue;
    int crossings = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const int next = j + 1 < n ? s[j + 1] : polygon.wrap() * s[0];
      crossings += s[j] != next ? 1 : 0;
    }
    best = std::max(best, crossings);
  }
  return std::max(best, 0);
}

bool separated(const OpenChain& chain, const Hyperplane& h) {
  if (chain.lifts.size() < 2) {
    throw GeometryError(ErrorCode::TooFewVertices, "a chain needs two endpoints");
  }
  if (h.side(chain.lifts.front()) == 0 || h.side(chain.lifts.back()) == 0) {
    throw GeometryError(ErrorCode::EndpointOnHyperplane,
                        "chain endpoints must not lie on the hyperplane");
  }
  return multiplicity(chain, h).value % 2 == 1;
}

std::vector<PencilSample> pencil_sweep(const LiftedPolygon& polygon,
                                       std::span<const std::size_t> indices) {
  const std::size_t dim = polygon.dim();
  const std::size_t n = polygon.size();
  if (dim < 2) throw GeometryError(ErrorCode::UnsupportedDimension, "pencils need d >= 2");
  if (indices.size() != dim - 1) {
    throw GeometryError(ErrorCode::DegenerateIndices, "a pencil needs exactly d-1 vertices");
  }
  std::vector<bool> chosen(n, false);
  Matrix rows;
  for (auto i : indices) {
    if (i >= n || chosen[i]) {
      throw GeometryError(ErrorCode::DegenerateIndices, "indices must be distinct and in range");
    }
    chosen[i] = true;
    rows.push_back(polygon.base(static_cast<long>(i)));
  }
  const auto basis = nullspace_basis(rows, dim + 1);
  if (basis.size() != 2) {
    throw GeometryError(ErrorCode::DegenerateIndices,
                        "chosen vertices do not span a codimension-2 flat");
  }
  const Vec& h0 = basis[0];
  const Vec& h1 = basis[1];

  // Hyperplane h0 + t*h1 contains vertex j at t = -a/b; b == 0 puts the event
  // at t = infinity, i.e. h1 itself.
  std::vector<Scalar> events;
  for (std::size_t j = 0; j < n; ++j) {
    if (chosen[j]) continue;
    const Vec& v = polygon.base(static_cast<long>(j));
    const Scalar a = dot(h0, v);
    const Scalar b = dot(h1, v);
    if (sgn(a) == 0 && sgn(b) == 0) {
      throw GeometryError(ErrorCode::DegenerateIndices,
                          "vertex " + std::to_string(j) + " lies on the pencil's axis");
    }
    if (sgn(b) != 0) events.push_back(-a / b);
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<Scalar> params;
  if (events.empty()) {
    params.push_back(0);
  } else {
    params.push_back(events.front() - 1);
    for (std::size_t i = 0; i < events.size(); ++i) {
      params.push_back(events[i]);
      if (i + 1 < events.size()) params.push_back((events[i] + events[i + 1]) / 2);
    }
    params.push_back(events.back() + 1);
  }

  std::vector<PencilSample> out;
  out.reserve(params.size() + 1);
  for (const auto& t : params) {
    Hyperplane h(add(h0, scaled(h1, t)));
    const int m = multiplicity(polygon, h).value;
    out.push_back({std::move(h), m});
  }
  Hyperplane at_infinity(h1);
  const int m = multiplicity(polygon, at_infinity).value;
  out.push_back({std::move(at_infinity), m});
  return out;
}

PencilExtreme pencil_min_multiplicity(const LiftedPolygon& polygon,
                                      std::span<const std::size_t> indices) {
  auto samples = pencil_sweep(polygon, indices);
  auto best = std::min_element(samples.begin(), samples.end(),
                               [](const auto& a, const auto& b) {
                                 return a.multiplicity < b.multiplicity;
                               });
  return {best->multiplicity, best->plane.canonical()};
}

PencilExtreme pencil_max_multiplicity(const LiftedPolygon& polygon,
                                      std::span<const std::size_t> indices) {
  auto samples = pencil_sweep(polygon, indices);
  auto best = std::max_element(samples.begin(), samples.end(),
                               [](const auto& a, const auto& b) {
                                 return a.multiplicity < b.multiplicity;
                               });
  return {best->multiplicity, best->plane.canonical()};
}

StrictConvexity is_strictly_convex(const LiftedPolygon& polygon) {
  const std::size_t dim = polygon.dim();
  if (dim < 2) throw GeometryError(ErrorCode::UnsupportedDimension, "needs d >= 2");
  StrictConvexity out;
  out.strictly_convex = true;
  const int target = static_cast<int>(dim) - 1;
  for_each_subset(polygon.size(), dim - 1, [&](const std::vector<std::size_t>& subset) {
    auto extreme = pencil_min_multiplicity(polygon, subset);
    if (extreme.multiplicity != target) {
      out.strictly_convex = false;
      out.failing_subset = subset;
      out.failing_multiplicity = extreme.multiplicity;
      return false;
    }
    out.witnesses.emplace(subset, std::move(extreme.witness));
    return true;
  });
  return out;
}

LiftedPolygon delete_vertex(const LiftedPolygon& polygon, std::size_t k) {
  if (polygon.size() < polygon.dim() + 2) {
    throw GeometryError(ErrorCode::TooFewVertices,
                        "deleting a vertex would leave fewer than d+1 vertices");
  }
  if (k >= polygon.size()) {
    throw GeometryError(ErrorCode::DegenerateIndices, "vertex index out of range");
  }
  auto lifts = polygon.lifts();
  lifts.erase(lifts.begin() + static_cast<long>(k));
  return LiftedPolygon(polygon.dim(), std::move(lifts), polygon.wrap());
}

DeletionDeterminants deletion_determinants(const LiftedPolygon& polygon, std::size_t k) {
  if (polygon.size() < polygon.dim() + 2) {
    throw GeometryError(ErrorCode::TooFewVertices, "needs n >= d+2");
  }
  const long d = static_cast<long>(polygon.dim());
  const long kk = static_cast<long>(k);
  DeletionDeterminants out;
  for (long j = kk - d; j <= kk; ++j) {
    auto w = polygon.window(j, static_cast<std::size_t>(d + 1));
    out.old_dets.push_back(det(std::span<const Vec>(w)));
  }
  for (long j = kk - d; j < kk; ++j) {
    std::vector<Vec> w;
    for (long m = j; m <= j + d + 1; ++m) {
      if (m != kk) w.push_back(polygon.lift(m));
    }
    out.new_dets.push_back(det(std::span<const Vec>(w)));
  }
  return out;
}

}  // namespace vertexlab
