// Copyright 2026 The latdim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latdim {

enum class ErrorKind {
  MalformedLine,
  SelfLoop,
  EmptyInput,
  VertexOutOfRange,
  Disconnected,
  NotBipartite,
  TooLarge,
  InconsistentClass,
  NotPartialCube,
  NotAMatching,
  NotMaximum,
  CycleDetected,
  NonUniqueCoordinate,
  NoCoordinate,
  IsometryViolation,
  SemicubeLookupFailed,
  DimensionTooHigh,
  NotEmbeddable,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InconsistentClass: return "InconsistentClass";
    case ErrorKind::NotPartialCube: return "NotPartialCube";
    case ErrorKind::NotAMatching: return "NotAMatching";
    case ErrorKind::NotMaximum: return "NotMaximum";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NonUniqueCoordinate: return "NonUniqueCoordinate";
    case ErrorKind::NoCoordinate: return "NoCoordinate";
    case ErrorKind::IsometryViolation: return "IsometryViolation";
    case ErrorKind::SemicubeLookupFailed: return "SemicubeLookupFailed";
    case ErrorKind::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorKind::NotEmbeddable: return "NotEmbeddable";
  }
  return "Unknown";
}

// A vertex pair whose distance in some candidate representation disagrees
// with the graph distance.
struct Violation {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t got = 0;
  std::size_t expected = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what),
        kind_(kind) {}

  Error(ErrorKind kind, const std::string& what, Violation violation)
      : Error(kind, what) {
    violation_ = violation;
  }

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::optional<Violation>& violation() const noexcept {
    return violation_;
  }

 private:
  ErrorKind kind_;
  std::optional<Violation> violation_;
};

}  // namespace latdim
