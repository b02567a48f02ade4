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

#include <array>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "mbg/board.hpp"
#include "mbg/core.hpp"
#include "mbg/winset.hpp"

namespace mbg {

// A board small enough for exact play: an explicit edge list plus winning
// sets as bitmasks over edge indices.
struct TinyBoard {
  int n_vertices = 0;
  std::vector<Edge> edges;
  std::vector<uint32_t> winning_sets;

  int edge_index(const Edge& e) const {
    for (size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e) return static_cast<int>(i);
    }
    return -1;
  }
};

struct SolveLimits {
  int max_edges = 16;
  long max_states = 50'000'000;
  // Canonicalize states under vertex permutations; only valid for complete
  // boards with at most this many vertices (0 disables).
  int canonicalize_up_to = 0;
};

// Enumerates the minimal winning sets of a family on a tiny board by
// checking every edge subset of the right size.
inline TinyBoard make_tiny_board(const Board& board, Family family, int k,
                                 const SolveLimits& limits = {}) {
  TinyBoard tb;
  tb.n_vertices = board.vertex_count();
  tb.edges = board.all_edges();
  int m = static_cast<int>(tb.edges.size());
  if (m > limits.max_edges) {
    throw LimitExceeded("board has " + std::to_string(m) +
                        " edges; solver limit is " +
                        std::to_string(limits.max_edges));
  }
  long s = min_winning_set_size(family, tb.n_vertices, k);
  if (s <= 0 || s > m) return tb;
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Edge> subset(s);
  for (;;) {
    uint32_t mask = 0;
    for (long i = 0; i < s; ++i) {
      subset[i] = tb.edges[idx[i]];
      mask |= 1u << idx[i];
    }
    if (is_winning_edge_set(subset, tb.n_vertices, family, k)) {
      tb.winning_sets.push_back(mask);
    }
    // next combination
    long i = s - 1;
    while (i >= 0 && idx[i] == m - s + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
  return tb;
}

namespace detail {

constexpr int kInfMoves = std::numeric_limits<int>::max() / 4;

class TinySolver {
 public:
  TinySolver(const TinyBoard& board, int a, int b, Side first,
             const SolveLimits& limits)
      : board_(board), a_(a), b_(b), first_(first), limits_(limits),
        m_(static_cast<int>(board.edges.size())) {
    if (m_ > limits.max_edges) {
      throw LimitExceeded("board exceeds solver edge limit");
    }
    if (a < 1 || b < 1) throw InvalidConfig("biases must be positive");
    canon_ = limits.canonicalize_up_to >= board.n_vertices &&
             board.n_vertices > 0 && is_complete_closed();
    if (canon_) build_permutations();
  }

  TauValue solve() {
    maker_mask_ = 0;
    breaker_mask_ = 0;
    int v = first_ == Side::Maker ? maker_move_start(0, kInfMoves)
                                  : rec_breaker(b_, 0, kInfMoves);
    if (v >= kInfMoves) return TauValue::breaker_win();
    return TauValue::finite(v);
  }

  // A move for `to_move` on the current empty board achieving the value.
  std::vector<Edge> best_move() {
    maker_mask_ = 0;
    breaker_mask_ = 0;
    std::vector<Edge> move;
    Side mover = first_;
    int bias = mover == Side::Maker ? a_ : b_;
    for (int step = 0; step < bias && free_count() > 0; ++step) {
      int best_e = -1;
      int best_v = mover == Side::Maker ? kInfMoves + 1 : -1;
      for (int e = 0; e < m_; ++e) {
        if (!is_free(e)) continue;
        claim(e, mover);
        int v;
        if (mover == Side::Maker) {
          if (maker_wins_now()) {
            v = 0;
          } else if (step + 1 < bias && free_count() > 0) {
            v = rec_maker(bias - step - 1, 0, kInfMoves);
          } else {
            v = free_count() == 0 ? kInfMoves : rec_breaker(b_, 0, kInfMoves);
          }
          if (v < best_v) {
            best_v = v;
            best_e = e;
          }
        } else {
          if (step + 1 < bias && free_count() > 0) {
            v = rec_breaker(bias - step - 1, 0, kInfMoves);
          } else if (free_count() == 0) {
            v = maker_wins_now() ? 0 : kInfMoves;
          } else {
            v = maker_move_start(0, kInfMoves);
          }
          if (v > best_v) {
            best_v = v;
            best_e = e;
          }
        }
        unclaim(e);
      }
      if (best_e < 0) break;
      move.push_back(board_.edges[best_e]);
      claim(best_e, mover);
      if (mover == Side::Maker && maker_wins_now()) break;
    }
    // reset
    maker_mask_ = 0;
    breaker_mask_ = 0;
    return move;
  }

  long states_visited() const { return states_; }

 private:
  bool is_complete_closed() const {
    // Vertex canonicalization needs the edge set to be permutation-closed.
    long want = static_cast<long>(board_.n_vertices) *
                (board_.n_vertices - 1) / 2;
    return static_cast<long>(board_.edges.size()) == want;
  }

  void build_permutations() {
    std::vector<int> perm(board_.n_vertices);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> edge_map(m_);
      for (int e = 0; e < m_; ++e) {
        Edge im(perm[board_.edges[e].u], perm[board_.edges[e].v]);
        edge_map[e] = board_.edge_index(im);
      }
      edge_perms_.push_back(std::move(edge_map));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool is_free(int e) const {
    uint32_t bit = 1u << e;
    return !(maker_mask_ & bit) && !(breaker_mask_ & bit);
  }
  int free_count() const {
    return m_ - __builtin_popcount(maker_mask_ | breaker_mask_);
  }
  void claim(int e, Side s) {
    uint32_t bit = 1u << e;
    if (s == Side::Maker) maker_mask_ |= bit;
    else breaker_mask_ |= bit;
  }
  void unclaim(int e) {
    uint32_t bit = ~(1u << e);
    maker_mask_ &= bit;
    breaker_mask_ &= bit;
  }

  bool maker_wins_now() const {
    for (uint32_t w : board_.winning_sets) {
      if ((w & maker_mask_) == w) return true;
    }
    return false;
  }

  // Maker can no longer complete any winning set.
  bool position_dead() const {
    for (uint32_t w : board_.winning_sets) {
      if ((w & breaker_mask_) == 0) return false;
    }
    return true;
  }

  uint64_t encode(Side to_move, int steps_left) const {
    uint64_t state;
    if (canon_) {
      uint64_t best = ~0ull;
      for (const auto& pm : edge_perms_) {
        uint64_t mm = 0, bm = 0;
        uint32_t rm = maker_mask_, rb = breaker_mask_;
        while (rm) {
          int e = __builtin_ctz(rm);
          rm &= rm - 1;
          mm |= 1ull << pm[e];
        }
        while (rb) {
          int e = __builtin_ctz(rb);
          rb &= rb - 1;
          bm |= 1ull << pm[e];
        }
        uint64_t enc = (mm << 32) | bm;
        best = std::min(best, enc);
      }
      state = best;
    } else {
      state = (static_cast<uint64_t>(maker_mask_) << 32) | breaker_mask_;
    }
    // Masks use at most 16 bits each, so the packed key stays injective.
    state = (state & 0xffffffffull) | ((state >> 32) << 16);
    return (state << 6) | (static_cast<uint64_t>(steps_left) << 1) |
           (to_move == Side::Maker ? 1 : 0);
  }

  struct Bounds {
    int lo = 0;
    int hi = kInfMoves + 1;
  };

  // Value = number of Maker moves still to start (the in-progress one, when
  // Maker is mid-move, was counted by maker_move_start). Maker minimizes;
  // Breaker maximizes; kInfMoves = Breaker win.
  int maker_move_start(int alpha, int beta) {
    return 1 + rec_maker(std::min(a_, free_count()),
                         std::max(0, alpha - 1),
                         beta >= kInfMoves ? beta : beta - 1);
  }

  int rec_maker(int steps_left, int alpha, int beta) {
    uint64_t key = encode(Side::Maker, steps_left);
    auto [it, inserted] = table_.try_emplace(key);
    if (!inserted) {
      if (it->second.lo == it->second.hi) return it->second.lo;
      if (it->second.lo >= beta) return it->second.lo;
      if (it->second.hi <= alpha) return it->second.hi;
      alpha = std::max(alpha, it->second.lo);
      beta = std::min(beta, it->second.hi);
    }
    if (++states_ > limits_.max_states) {
      throw LimitExceeded("solver state limit exceeded");
    }
    int best = kInfMoves;
    if (position_dead()) {
      best = kInfMoves;
    } else {
      int a0 = alpha, b0 = beta;
      bool cut = false;
      for (int e = 0; e < m_ && !cut; ++e) {
        if (!is_free(e)) continue;
        claim(e, Side::Maker);
        int v;
        if (maker_wins_now()) {
          v = 0;
        } else if (steps_left > 1 && free_count() > 0) {
          v = rec_maker(steps_left - 1, a0, b0);
        } else if (free_count() == 0) {
          v = kInfMoves;  // exhausted without a Maker win
        } else {
          v = rec_breaker(std::min(b_, free_count()), a0, b0);
        }
        unclaim(e);
        best = std::min(best, v);
        b0 = std::min(b0, best);
        if (best <= a0) cut = true;
      }
    }
    // Store bounds (fail-soft alpha-beta with a transposition table).
    Bounds& b = table_[key];
    if (best <= alpha) {
      b.hi = std::min(b.hi, best);
    } else if (best >= beta) {
      b.lo = std::max(b.lo, best);
    } else {
      b.lo = b.hi = best;
    }
    return best;
  }

  int rec_breaker(int steps_left, int alpha, int beta) {
    uint64_t key = encode(Side::Breaker, steps_left);
    auto [it, inserted] = table_.try_emplace(key);
    if (!inserted) {
      if (it->second.lo == it->second.hi) return it->second.lo;
      if (it->second.lo >= beta) return it->second.lo;
      if (it->second.hi <= alpha) return it->second.hi;
      alpha = std::max(alpha, it->second.lo);
      beta = std::min(beta, it->second.hi);
    }
    if (++states_ > limits_.max_states) {
      throw LimitExceeded("solver state limit exceeded");
    }
    int best;
    if (position_dead()) {
      best = kInfMoves;
    } else {
      best = -1;
      int a0 = alpha, b0 = beta;
      bool cut = false;
      for (int e = 0; e < m_ && !cut; ++e) {
        if (!is_free(e)) continue;
        claim(e, Side::Breaker);
        int v;
        if (steps_left > 1 && free_count() > 0) {
          v = rec_breaker(steps_left - 1, a0, b0);
        } else if (free_count() == 0) {
          v = kInfMoves;  // Maker never completed a set
        } else {
          v = maker_move_start(a0, b0);
        }
        unclaim(e);
        best = std::max(best, v);
        a0 = std::max(a0, best);
        if (best >= b0) cut = true;
      }
      if (best < 0) best = kInfMoves;  // no free edge: exhausted
    }
    Bounds& b = table_[key];
    if (best <= alpha) {
      b.hi = std::min(b.hi, best);
    } else if (best >= beta) {
      b.lo = std::max(b.lo, best);
    } else {
      b.lo = b.hi = best;
    }
    return best;
  }

  const TinyBoard& board_;
  int a_;
  int b_;
  Side first_;
  SolveLimits limits_;
  int m_;
  bool canon_ = false;
  uint32_t maker_mask_ = 0;
  uint32_t breaker_mask_ = 0;
  long states_ = 0;
  std::unordered_map<uint64_t, Bounds> table_;
  std::vector<std::vector<int>> edge_perms_;
};

}  // namespace detail

// Exact game value: minimum over Maker strategies of the maximum over
// Breaker strategies of Maker's move count (partial final move included),
// or BreakerWin.
inline TauValue solve_tau(const TinyBoard& board, int a, int b, Side first,
                          const SolveLimits& limits = {}) {
  return detail::TinySolver(board, a, b, first, limits).solve();
}

inline TauValue solve_tau(const Board& board, Family family, int k, int a,
                          int b, Side first, const SolveLimits& limits = {}) {
  TinyBoard tb = make_tiny_board(board, family, k, limits);
  return solve_tau(tb, a, b, first, limits);
}

// A full move for the first player achieving the solve_tau value.
inline std::vector<Edge> best_move(const TinyBoard& board, int a, int b,
                                   Side to_move,
                                   const SolveLimits& limits = {}) {
  return detail::TinySolver(board, a, b, to_move, limits).best_move();
}

// Reference implementation for tests: plain minimax over the full move tree
// with no memoization and no pruning beyond the win/dead/exhaustion
// terminals.
inline TauValue brute_force_tau(const TinyBoard& board, int a, int b,
                                Side first) {
  int m = static_cast<int>(board.edges.size());
  uint32_t maker = 0, breaker = 0;
  auto wins = [&](uint32_t mask) {
    for (uint32_t w : board.winning_sets) {
      if ((w & mask) == w) return true;
    }
    return false;
  };
  auto dead = [&]() {
    for (uint32_t w : board.winning_sets) {
      if ((w & breaker) == 0) return false;
    }
    return true;
  };
  auto free_count = [&]() {
    return m - __builtin_popcount(maker | breaker);
  };
  // moves-to-start counting as in the solver.
  auto rec = [&](auto&& self, Side to_move, int steps_left) -> int {
    if (dead()) return detail::kInfMoves;
    int best = to_move == Side::Maker ? detail::kInfMoves : -1;
    for (int e = 0; e < m; ++e) {
      uint32_t bit = 1u << e;
      if ((maker | breaker) & bit) continue;
      int v;
      if (to_move == Side::Maker) {
        maker |= bit;
        if (wins(maker)) {
          v = 0;
        } else if (steps_left > 1 && free_count() > 0) {
          v = self(self, Side::Maker, steps_left - 1);
        } else if (free_count() == 0) {
          v = detail::kInfMoves;
        } else {
          v = self(self, Side::Breaker, std::min(b, free_count()));
        }
        maker &= ~bit;
        best = std::min(best, v);
      } else {
        breaker |= bit;
        if (steps_left > 1 && free_count() > 0) {
          v = self(self, Side::Breaker, steps_left - 1);
        } else if (free_count() == 0) {
          v = detail::kInfMoves;
        } else {
          v = 1 + self(self, Side::Maker, std::min(a, free_count()));
          if (v > detail::kInfMoves) v = detail::kInfMoves;
        }
        breaker &= ~bit;
        best = std::max(best, v);
      }
    }
    if (to_move == Side::Breaker && best < 0) best = detail::kInfMoves;
    return best;
  };
  if (m == 0) return TauValue::breaker_win();
  int v;
  if (first == Side::Maker) {
    v = 1 + rec(rec, Side::Maker, std::min(a, m));
    if (v > detail::kInfMoves) v = detail::kInfMoves;
  } else {
    v = rec(rec, Side::Breaker, std::min(b, m));
  }
  if (v >= detail::kInfMoves) return TauValue::breaker_win();
  return TauValue::finite(v);
}

}  // namespace mbg
