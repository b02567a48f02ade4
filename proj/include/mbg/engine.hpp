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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbg/board.hpp"
#include "mbg/core.hpp"
#include "mbg/winset.hpp"

namespace mbg {

struct GameConfig {
  Family family = Family::PM;
  Mode mode = Mode::MakerBreaker;
  Board::Kind board = Board::Kind::Complete;
  // Complete boards: number of vertices. Bipartite boards: size of each
  // class (only balanced K_{n,n} boards are configurable).
  int n = 0;
  int k = 0;  // factor games only
  int maker_bias = 1;   // a
  int breaker_bias = 1; // b
  Side first_player = Side::Breaker;
  uint64_t seed = 0;

  int vertex_count() const {
    return board == Board::Kind::Complete ? n : 2 * n;
  }

  Board make_board() const {
    return board == Board::Kind::Complete ? Board::complete(n)
                                          : Board::bipartite(n, n);
  }

  void validate() const {
    if (maker_bias < 1 || breaker_bias < 1) {
      throw InvalidConfig("biases must be positive");
    }
    if (n < 1) throw InvalidConfig("board size must be positive");
    if (family == Family::PkFactor || family == Family::SkFactor) {
      if (k < 2) throw InvalidConfig("factor games need k >= 2");
      if (board != Board::Kind::Complete) {
        throw InvalidConfig("factor games are played on K_n");
      }
      if (n % k != 0) throw InvalidConfig("factor games need k | n");
    }
    if (mode == Mode::Strong && first_player != Side::Maker) {
      throw InvalidConfig("Red moves first in strong games");
    }
  }

  int bias(Side s) const {
    return s == Side::Maker ? maker_bias : breaker_bias;
  }
};

struct Outcome {
  // Winner, or nullopt for a drawn strong game / exhausted board recorded
  // mid-replay. In Maker-Breaker mode exhaustion without a Maker win is a
  // Breaker win.
  std::optional<Side> winner;
  long maker_moves_used = 0;
};

struct MoveRecord {
  Side player = Side::Maker;
  long round = 0;  // this player's move ordinal, 1-based
  std::vector<Edge> edges;
};

// Named invariant checks accumulated while a game runs. A name fails if any
// of its checks failed.
class InvariantLog {
 public:
  bool check(const std::string& name, bool ok) {
    auto& e = entries_[name];
    ++e.checked;
    if (!ok) ++e.failed;
    return ok;
  }

  bool all_pass() const {
    for (const auto& [name, e] : entries_) {
      if (e.failed > 0) return false;
    }
    return true;
  }

  std::map<std::string, bool> report() const {
    std::map<std::string, bool> out;
    for (const auto& [name, e] : entries_) out[name] = e.failed == 0;
    return out;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& [name, e] : entries_) {
      if (e.failed > 0) out.push_back(name);
    }
    return out;
  }

 private:
  struct Entry {
    long checked = 0;
    long failed = 0;
  };
  std::map<std::string, Entry> entries_;
};

struct Transcript {
  GameConfig config;
  std::vector<Edge> handicap;
  std::vector<MoveRecord> moves;
  std::optional<Side> winner;
  long maker_moves_used = 0;
  std::map<std::string, bool> invariant_report;
};

// Board + counters + transcript-in-progress.
class GameState {
 public:
  GameState(const GameConfig& config, std::vector<Edge> handicap)
      : config_(config), board_(config.make_board()),
        handicap_(std::move(handicap)), to_move_(config.first_player) {
    config_.validate();
    for (const Edge& e : handicap_) {
      if (!board_.is_edge(e.u, e.v)) {
        throw InvalidHandicap("handicap edge off the board: " + e.str());
      }
      if (!board_.is_free(e)) {
        throw InvalidHandicap("duplicate handicap edge: " + e.str());
      }
      board_.claim(e, Side::Breaker);
    }
  }

  const GameConfig& config() const { return config_; }
  const Board& board() const { return board_; }
  const std::vector<Edge>& handicap() const { return handicap_; }
  const std::vector<MoveRecord>& moves() const { return moves_; }
  Side to_move() const { return to_move_; }
  bool finished() const { return outcome_.has_value(); }
  const Outcome& outcome() const { return *outcome_; }

  // Number of completed moves of the given player.
  long moves_made(Side s) const {
    long c = 0;
    for (const MoveRecord& m : moves_) {
      if (m.player == s) ++c;
    }
    return c;
  }

  // Steps already taken in the move currently in progress.
  int steps_taken() const { return steps_taken_; }

  // Edges of the opponent's most recent completed move (empty before it).
  std::vector<Edge> last_move_edges(Side player) const {
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) {
      if (it->player == player) return it->edges;
    }
    return {};
  }

  // Claims one edge for `player`. Win detection runs after every step of the
  // side(s) whose winning sets matter; a mid-move win finishes the game with
  // the partial move counted.
  void apply_step(Side player, const Edge& e) {
    if (finished()) throw IllegalStep("game already finished");
    if (player != to_move_) throw IllegalStep("not this player's turn");
    if (steps_taken_ >= config_.bias(player)) {
      throw IllegalStep("bias exceeded");
    }
    board_.claim(e, player);  // throws IllegalStep if not free
    current_move_.push_back(e);
    ++steps_taken_;

    bool check_win =
        config_.mode == Mode::Strong || player == Side::Maker;
    if (check_win && detect_win(player)) {
      outcome_ = Outcome{player, maker_moves_with_current(player)};
      commit_move(player);
      return;
    }
    if (board_.free_edges() == 0) {
      commit_move(player);
      if (config_.mode == Mode::MakerBreaker) {
        // Board exhausted without a Maker win: Breaker wins.
        outcome_ = Outcome{Side::Breaker, moves_made(Side::Maker)};
      } else {
        outcome_ = Outcome{std::nullopt, moves_made(Side::Maker)};
      }
      return;
    }
    if (steps_taken_ == config_.bias(player)) {
      commit_move(player);
      to_move_ = opponent(player);
    }
  }

  long required_steps(Side player) const {
    return std::min<long>(config_.bias(player), board_.free_edges());
  }

  Transcript snapshot() const {
    Transcript t;
    t.config = config_;
    t.handicap = handicap_;
    t.moves = moves_;
    if (outcome_) {
      t.winner = outcome_->winner;
      t.maker_moves_used = outcome_->maker_moves_used;
    } else {
      t.maker_moves_used = moves_made(Side::Maker);
    }
    return t;
  }

  // Engine bookkeeping invariants (cheap recounts).
  bool conservation_holds() const {
    return board_.claimed_count(Side::Maker) +
               board_.claimed_count(Side::Breaker) + board_.free_edges() ==
           board_.total_edges();
  }

  bool degree_tables_consistent() const {
    for (Side s : {Side::Maker, Side::Breaker}) {
      std::vector<int> recount(board_.vertex_count(), 0);
      for (const Edge& e : board_.claimed_edges(s)) {
        ++recount[e.u];
        ++recount[e.v];
      }
      for (Vertex v = 0; v < board_.vertex_count(); ++v) {
        if (recount[v] != board_.degree(s, v)) return false;
      }
    }
    return true;
  }

 private:
  long maker_moves_with_current(Side winner) const {
    long done = moves_made(Side::Maker);
    if (winner == Side::Maker) return done + 1;  // current partial move
    return done;
  }

  bool detect_win(Side player) {
    long claimed = board_.claimed_count(player);
    if (claimed < min_winning_set_size(config_.family,
                                       board_.vertex_count(), config_.k)) {
      return false;
    }
    Graph g = board_.side_graph(player);
    return contains_winning_set(g, config_.family, config_.k);
  }

  void commit_move(Side player) {
    MoveRecord rec;
    rec.player = player;
    rec.round = moves_made(player) + 1;
    rec.edges = std::move(current_move_);
    current_move_.clear();
    moves_.push_back(std::move(rec));
    steps_taken_ = 0;
  }

  GameConfig config_;
  Board board_;
  std::vector<Edge> handicap_;
  std::vector<MoveRecord> moves_;
  std::vector<Edge> current_move_;
  int steps_taken_ = 0;
  Side to_move_;
  std::optional<Outcome> outcome_;
};

inline GameState new_game(const GameConfig& config,
                          std::vector<Edge> handicap = {}) {
  return GameState(config, std::move(handicap));
}

// ---------------------------------------------------------------------------
// Strategy interface.

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;

  // Produce the edges of this player's current move, in claim order. The
  // list must contain exactly state.required_steps(side) edges unless a
  // prefix of it wins the game. Strategies may consult the full state
  // (board, move log) and keep private memory between calls.
  virtual std::vector<Edge> next_move(const GameState& state, Side side,
                                      InvariantLog& log) = 0;
};

// Thrown out of play() with the partial transcript attached.
struct PlayAborted : std::runtime_error {
  Transcript transcript;
  std::string strategy;
  PlayAborted(const StrategyFailure& f, Transcript t)
      : std::runtime_error(f.what()), transcript(std::move(t)),
        strategy(f.strategy) {}
};

// Alternates full moves until a player wins or the board is exhausted.
inline Transcript play(Strategy& maker, Strategy& breaker,
                       const GameConfig& config,
                       std::vector<Edge> handicap = {}) {
  GameState state(config, std::move(handicap));
  InvariantLog log;
  auto pick = [&](Side s) -> Strategy& {
    return s == Side::Maker ? maker : breaker;
  };
  while (!state.finished()) {
    Side mover = state.to_move();
    Strategy& strat = pick(mover);
    long need = state.required_steps(mover);
    std::vector<Edge> move;
    try {
      move = strat.next_move(state, mover, log);
      if (move.empty()) {
        throw StrategyFailure(strat.name(), "returned an empty move");
      }
      for (const Edge& e : move) {
        state.apply_step(mover, e);
        if (state.finished()) break;
      }
      if (!state.finished() &&
          static_cast<long>(move.size()) < need) {
        throw StrategyFailure(strat.name(),
                              "short move without winning (" +
                                  std::to_string(move.size()) + " of " +
                                  std::to_string(need) + " steps)");
      }
    } catch (const IllegalStep& e) {
      Transcript t = state.snapshot();
      t.invariant_report = log.report();
      throw PlayAborted(
          StrategyFailure(strat.name(),
                          std::string("illegal step: ") + e.what()),
          std::move(t));
    } catch (const StrategyFailure& f) {
      Transcript t = state.snapshot();
      t.invariant_report = log.report();
      throw PlayAborted(f, std::move(t));
    }
    log.check("engine.conservation", state.conservation_holds());
  }
  log.check("engine.degree_tables", state.degree_tables_consistent());
  const Outcome& out = state.outcome();
  // Lower-bound consistency: a winner's claimed graph contains a winning
  // set, so it has at least that many edges.
  if (out.winner) {
    long claimed = state.board().claimed_count(*out.winner);
    long minimum = min_winning_set_size(
        config.family, state.board().vertex_count(), config.k);
    log.check("engine.win_edge_lower_bound", claimed >= minimum);
    if (*out.winner == Side::Maker) {
      log.check("engine.win_move_lower_bound",
                out.maker_moves_used >=
                    ceil_div(minimum, config.maker_bias));
    }
  }
  log.check("engine.round_accounting",
            out.maker_moves_used == state.moves_made(Side::Maker));
  Transcript t = state.snapshot();
  t.invariant_report = log.report();
  return t;
}

// Deterministic reconstruction of a transcript; re-validates every step.
inline GameState replay(const Transcript& t) {
  GameState state = [&] {
    try {
      return GameState(t.config, t.handicap);
    } catch (const std::exception& e) {
      throw CorruptTranscript(std::string("bad config/handicap: ") + e.what());
    }
  }();
  for (const MoveRecord& rec : t.moves) {
    if (state.finished()) {
      throw CorruptTranscript("moves recorded after the game finished");
    }
    if (rec.player != state.to_move()) {
      throw CorruptTranscript("move out of turn order");
    }
    if (rec.round != state.moves_made(rec.player) + 1) {
      throw CorruptTranscript("round index mismatch");
    }
    long need = state.required_steps(rec.player);
    if (static_cast<long>(rec.edges.size()) > need) {
      throw CorruptTranscript("move exceeds bias");
    }
    for (const Edge& e : rec.edges) {
      try {
        state.apply_step(rec.player, e);
      } catch (const IllegalStep& err) {
        throw CorruptTranscript(std::string("illegal step in transcript: ") +
                                err.what());
      }
    }
    if (!state.finished() &&
        static_cast<long>(rec.edges.size()) < need) {
      throw CorruptTranscript("short move without a win");
    }
  }
  if (t.winner.has_value()) {
    if (!state.finished()) {
      throw CorruptTranscript("recorded winner but game not finished");
    }
    if (state.outcome().winner != t.winner ||
        state.outcome().maker_moves_used != t.maker_moves_used) {
      throw CorruptTranscript("winner or move count mismatch on replay");
    }
  } else if (state.finished() && state.outcome().winner.has_value()) {
    throw CorruptTranscript("transcript omits the winner");
  }
  return state;
}

}  // namespace mbg
