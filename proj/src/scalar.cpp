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

#include "vertexlab/scalar.hpp"

#include <cctype>

#include "vertexlab/error.hpp"

namespace vertexlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SingularMap: return "SingularMap";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NonConvex: return "NonConvex";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NonIncreasingParameters: return "NonIncreasingParameters";
    case ErrorCode::NotCyclicallyOrdered: return "NotCyclicallyOrdered";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EdgeInsideHyperplane: return "EdgeInsideHyperplane";
    case ErrorCode::ChainTooLong: return "ChainTooLong";
    case ErrorCode::InvalidTrials: return "InvalidTrials";
    case ErrorCode::EndpointOnHyperplane: return "EndpointOnHyperplane";
    case ErrorCode::DegenerateIndices: return "DegenerateIndices";
    case ErrorCode::CollinearCircle: return "CollinearCircle";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::DegenerateFlattening: return "DegenerateFlattening";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DegenerateOnGraph: return "DegenerateOnGraph";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
  }
  return "Unknown";
}

std::string to_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw GeometryError(ErrorCode::ParseError,
                        "malformed rational '" + std::string(text) + "'");
  }
  Scalar out;
  if (slash == std::string_view::npos) {
    out = Scalar(parse_integer(num));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
      throw GeometryError(ErrorCode::ParseError,
                          "malformed rational '" + std::string(text) + "'");
    }
    mpz_class q = parse_integer(den);
    if (q == 0) {
      throw GeometryError(ErrorCode::ParseError,
                          "zero denominator in '" + std::string(text) + "'");
    }
    out = Scalar(parse_integer(num), q);
    out.canonicalize();
  }
  return out;
}

double to_double(const Scalar& x) { return x.get_d(); }

}  // namespace vertexlab
