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

#include <string>

#include <json.hpp>

#include "mbg/engine.hpp"

namespace mbg {

// Transcript wire format:
//   {config:{family,n,k?,a,b,first,mode,board,handicap:[[u,v],...],seed},
//    moves:[{player,round,edges:[[u,v],...]}],
//    winner, maker_moves_used, invariant_report:{name:"pass"|"fail",...}}
// Edge pairs are written u < v; move order is preserved.

inline nlohmann::json edge_to_json(const Edge& e) {
  return nlohmann::json::array({e.u, e.v});
}

inline Edge edge_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw CorruptTranscript("edge must be a [u,v] pair");
  }
  int u = j[0].get<int>();
  int v = j[1].get<int>();
  if (u >= v) throw CorruptTranscript("edge pair must be sorted u < v");
  return Edge(u, v);
}

inline std::string winner_string(const std::optional<Side>& w, Mode mode) {
  if (!w) return "none";
  return side_name(*w, mode);
}

inline nlohmann::json transcript_to_json(const Transcript& t) {
  const GameConfig& c = t.config;
  nlohmann::json config;
  config["family"] = family_name(c.family);
  config["n"] = c.n;
  if (c.family == Family::PkFactor || c.family == Family::SkFactor) {
    config["k"] = c.k;
  }
  config["a"] = c.maker_bias;
  config["b"] = c.breaker_bias;
  config["first"] = side_name(c.first_player, c.mode);
  config["mode"] = c.mode == Mode::Strong ? "strong" : "mb";
  config["board"] = c.board == Board::Kind::Complete ? "kn" : "bip";
  nlohmann::json handicap = nlohmann::json::array();
  for (const Edge& e : t.handicap) handicap.push_back(edge_to_json(e));
  config["handicap"] = handicap;
  config["seed"] = c.seed;

  nlohmann::json moves = nlohmann::json::array();
  for (const MoveRecord& m : t.moves) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : m.edges) edges.push_back(edge_to_json(e));
    moves.push_back({{"player", side_name(m.player, c.mode)},
                     {"round", m.round},
                     {"edges", edges}});
  }

  nlohmann::json report = nlohmann::json::object();
  for (const auto& [name, pass] : t.invariant_report) {
    report[name] = pass ? "pass" : "fail";
  }

  return nlohmann::json{{"config", config},
                        {"moves", moves},
                        {"winner", winner_string(t.winner, c.mode)},
                        {"maker_moves_used", t.maker_moves_used},
                        {"invariant_report", report}};
}

inline Transcript transcript_from_json(const nlohmann::json& j) {
  Transcript t;
  try {
    const nlohmann::json& config = j.at("config");
    GameConfig& c = t.config;
    c.family = parse_family(config.at("family").get<std::string>());
    c.n = config.at("n").get<int>();
    if (config.contains("k")) c.k = config.at("k").get<int>();
    c.maker_bias = config.at("a").get<int>();
    c.breaker_bias = config.at("b").get<int>();
    c.mode = config.at("mode").get<std::string>() == "strong"
                 ? Mode::Strong
                 : Mode::MakerBreaker;
    std::string first = config.at("first").get<std::string>();
    if (first == "maker" || first == "red") c.first_player = Side::Maker;
    else if (first == "breaker" || first == "blue") c.first_player = Side::Breaker;
    else throw CorruptTranscript("unknown first player: " + first);
    c.board = config.at("board").get<std::string>() == "bip"
                  ? Board::Kind::Bipartite
                  : Board::Kind::Complete;
    c.seed = config.at("seed").get<uint64_t>();
    for (const auto& e : config.at("handicap")) {
      t.handicap.push_back(edge_from_json(e));
    }
    for (const auto& m : j.at("moves")) {
      MoveRecord rec;
      std::string player = m.at("player").get<std::string>();
      if (player == "maker" || player == "red") rec.player = Side::Maker;
      else if (player == "breaker" || player == "blue") rec.player = Side::Breaker;
      else throw CorruptTranscript("unknown player: " + player);
      rec.round = m.at("round").get<long>();
      for (const auto& e : m.at("edges")) {
        rec.edges.push_back(edge_from_json(e));
      }
      t.moves.push_back(std::move(rec));
    }
    std::string winner = j.at("winner").get<std::string>();
    if (winner == "none") t.winner = std::nullopt;
    else if (winner == "maker" || winner == "red") t.winner = Side::Maker;
    else if (winner == "breaker" || winner == "blue") t.winner = Side::Breaker;
    else throw CorruptTranscript("unknown winner: " + winner);
    t.maker_moves_used = j.at("maker_moves_used").get<long>();
    if (j.contains("invariant_report")) {
      for (const auto& [name, val] : j.at("invariant_report").items()) {
        t.invariant_report[name] = val.get<std::string>() == "pass";
      }
    }
  } catch (const CorruptTranscript&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptTranscript(std::string("malformed transcript JSON: ") +
                            e.what());
  }
  return t;
}

inline std::string transcript_to_string(const Transcript& t) {
  return transcript_to_json(t).dump(2) + "\n";
}

inline Transcript transcript_from_string(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const std::exception& e) {
    throw CorruptTranscript(std::string("invalid JSON: ") + e.what());
  }
  return transcript_from_json(j);
}

}  // namespace mbg
