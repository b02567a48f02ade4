// Copyright 2026 The mbg Authors
//
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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mbg {

using Vertex = int;

// An undirected edge, stored with u < v.
struct Edge {
  Vertex u = -1;
  Vertex v = -1;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;

  std::string str() const {
    return std::to_string(u) + "-" + std::to_string(v);
  }
};

enum class Side : uint8_t { Maker, Breaker };

inline Side opponent(Side s) {
  return s == Side::Maker ? Side::Breaker : Side::Maker;
}

enum class Family : uint8_t { PM, Ham, PkFactor, SkFactor };

enum class Mode : uint8_t { MakerBreaker, Strong };

enum class EdgeState : uint8_t { Free, Maker, Breaker, Absent };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::PM: return "pm";
    case Family::Ham: return "ham";
    case Family::PkFactor: return "pkf";
    case Family::SkFactor: return "skf";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "pm") return Family::PM;
  if (s == "ham") return Family::Ham;
  if (s == "pkf") return Family::PkFactor;
  if (s == "skf") return Family::SkFactor;
  throw std::invalid_argument("unknown game family: " + s);
}

// Maker-side/Breaker-side display names depend on the game mode.
inline std::string side_name(Side s, Mode m) {
  if (m == Mode::Strong) return s == Side::Maker ? "red" : "blue";
  return s == Side::Maker ? "maker" : "breaker";
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// ---------------------------------------------------------------------------
// Error types.

struct InvalidConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidHandicap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllegalStep : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorruptTranscript : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfValidity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeConditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a strategy cannot produce a move mandated by its contract.
// `detail` names the violated rule, claim or property.
struct StrategyFailure : std::runtime_error {
  std::string strategy;
  std::string detail;

  StrategyFailure(std::string strategy_name, std::string what)
      : std::runtime_error(strategy_name + ": " + what),
        strategy(std::move(strategy_name)),
        detail(std::move(what)) {}
};

}  // namespace mbg
