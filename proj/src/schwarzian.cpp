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

#include <charconv>
#include <string>

#include "vertexlab/campaigns.hpp"
#include "vertexlab/error.hpp"

namespace vertexlab {

namespace {

// Exact rational value of the shortest decimal that round-trips to x, so
// 1e-3 becomes 1/1000 rather than its binary approximation.
Scalar decimal_value(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
  const std::string text(buf, end);
  const auto e = text.find('e');
  std::string mantissa = text.substr(0, e);
  long exponent = std::stol(text.substr(e + 1));
  const auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  Scalar value(mpz_class(mantissa, 10));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= scale;
  } else {
    value *= scale;
  }
  return value;
}

Scalar apply(TestFunction f, const Scalar& x) {
  switch (f) {
    case TestFunction::Cubic:
      return x + x * x * x;
    case TestFunction::Projective:
      return x / (1 + x);
  }
  return x;
}

Vec affine(const Scalar& x) { return {x, Scalar(1)}; }

}  // namespace

Scalar schwarzian_quotient(const Scalar& epsilon, TestFunction function) {
  if (sgn(epsilon) <= 0) {
    throw GeometryError(ErrorCode::ConfigInvalid, "epsilon must be positive");
  }
  Vec xs[4];
  Vec fs[4];
  for (int k = 0; k < 4; ++k) {
    const Scalar x = epsilon * k;
    xs[k] = affine(x);
    fs[k] = affine(apply(function, x));
  }
  const Scalar diff = cross_ratio(fs[0], fs[1], fs[2], fs[3]) - cross_ratio(xs[0], xs[1], xs[2], xs[3]);
  return diff / (epsilon * epsilon);
}

SchwarzianTable schwarzian_check(const std::vector<double>& epsilons, TestFunction function) {
  if (epsilons.empty()) throw GeometryError(ErrorCode::ConfigInvalid, "no epsilons given");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0)) {
      throw GeometryError(ErrorCode::ConfigInvalid, "epsilons must be positive");
    }
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw GeometryError(ErrorCode::ConfigInvalid, "epsilons must be strictly decreasing");
    }
  }
  SchwarzianTable table;
  table.function = function;
  table.schwarzian_at_zero = function == TestFunction::Cubic ? 6.0 : 0.0;
  for (double e : epsilons) {
    const double value = schwarzian_quotient(decimal_value(e), function).get_d();
    table.rows.push_back({e, value, value - table.schwarzian_at_zero});
  }
  return table;
}

}  // namespace vertexlab
