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
#include <span>
#include <vector>

#include "vertexlab/scalar.hpp"

namespace vertexlab {

using Vec = std::vector<Scalar>;
// Row-major dense matrix; every row must have the same length.
using Matrix = std::vector<Vec>;

Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const Scalar& s);
Vec add(const Vec& a, const Vec& b);

// Exact determinant of a square matrix given as rows.
Scalar determinant(Matrix rows);
// Determinant of the matrix whose columns (equivalently rows) are `vectors`.
Scalar determinant(std::span<const Vec> vectors);

std::size_t rank(Matrix rows);

// Basis of { v : M v = 0 } for an r x cols matrix. `cols` is needed so an
// empty M yields the full standard basis.
std::vector<Vec> nullspace_basis(const Matrix& rows, std::size_t cols);

// Solves A x = b. Throws SingularMap when A is singular.
Vec solve(Matrix a, Vec b);

Matrix inverse(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
Vec multiply(const Matrix& a, const Vec& v);
Matrix identity_matrix(std::size_t n);

}  // namespace vertexlab
