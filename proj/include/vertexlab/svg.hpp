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

#include <string>

#include "vertexlab/polygon.hpp"

namespace vertexlab {

enum class SvgHighlight { None, ExtremalTriples, ExtremalQuintuples };

// Affine-chart drawing of a planar polygon. Extremal triples come with their
// circles and extremal quintuples with their conics, sampled at exact
// rational points. Output is byte-deterministic.
std::string render_planar_svg(const PlanarConvexPolygon& polygon,
                              SvgHighlight highlight = SvgHighlight::None);

// The broken line (x_j, y_j) on the torus RP^1 x RP^1, drawn as a unit square
// with opposite sides identified, together with the graph of the projective
// map through each extremal index triple.
std::string render_torus_svg(const PairTuples& tuples, bool highlight_extremal = true);

}  // namespace vertexlab
