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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vertexlab {

// Exact rational of unbounded precision. gmpxx keeps results of arithmetic
// canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

inline int sign(const Scalar& x) { return sgn(x); }

// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
// gmp arithmetic requires canonical operands.
inline Scalar ratio(long num, long den) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

// "p/q" with q >= 1, always including the denominator.
std::string to_string(const Scalar& x);

// Accepts "p", "p/q", optional leading sign; q must be nonzero. The result is
// canonicalized, so "-6/4" parses to -3/2.
Scalar parse_scalar(std::string_view text);

double to_double(const Scalar& x);

}  // namespace vertexlab
