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

#include <stdexcept>
#include <string>
#include <string_view>

namespace vertexlab {

enum class ErrorCode {
  DimensionMismatch,
  ZeroVector,
  SingularMap,
  DegenerateInput,
  NonConvex,
  CollinearTriple,
  TooFewVertices,
  NonIncreasingParameters,
  NotCyclicallyOrdered,
  DuplicatePoint,
  LengthMismatch,
  EdgeInsideHyperplane,
  ChainTooLong,
  InvalidTrials,
  EndpointOnHyperplane,
  DegenerateIndices,
  CollinearCircle,
  DegenerateConfiguration,
  DegenerateFlattening,
  NotGeneric,
  DegenerateTriple,
  DegenerateOnGraph,
  ConfigInvalid,
  ParseError,
  UnsupportedDimension,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can dispatch without string matching.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace vertexlab
