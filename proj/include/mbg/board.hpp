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

#include <vector>

#include "mbg/core.hpp"
#include "mbg/graph.hpp"

namespace mbg {

// Edge-state table over K_n or K_{x,y}. For bipartite boards the fixed
// bipartition is X = {0..left-1}, Y = {left..left+right-1}. Degree tables
// per player are maintained incrementally.
class Board {
 public:
  enum class Kind : uint8_t { Complete, Bipartite };

  static Board complete(int n) { return Board(Kind::Complete, n, 0); }
  static Board bipartite(int left, int right) {
    return Board(Kind::Bipartite, left, right);
  }

  Kind kind() const { return kind_; }
  int vertex_count() const { return nv_; }
  int left_size() const { return left_; }
  int right_size() const { return right_; }

  bool is_vertex(Vertex v) const { return v >= 0 && v < nv_; }

  // True iff {u,v} is an edge of the board graph.
  bool is_edge(Vertex u, Vertex v) const {
    if (u == v || !is_vertex(u) || !is_vertex(v)) return false;
    if (kind_ == Kind::Complete) return true;
    return (u < left_) != (v < left_);
  }

  EdgeState state(Vertex u, Vertex v) const {
    if (!is_edge(u, v)) return EdgeState::Absent;
    return state_[idx(u, v)];
  }
  EdgeState state(const Edge& e) const { return state(e.u, e.v); }

  bool is_free(Vertex u, Vertex v) const {
    return state(u, v) == EdgeState::Free;
  }
  bool is_free(const Edge& e) const { return is_free(e.u, e.v); }

  bool owned_by(Side s, Vertex u, Vertex v) const {
    return state(u, v) ==
           (s == Side::Maker ? EdgeState::Maker : EdgeState::Breaker);
  }
  bool owned_by(Side s, const Edge& e) const { return owned_by(s, e.u, e.v); }

  void claim(const Edge& e, Side s) {
    if (!is_edge(e.u, e.v)) {
      throw IllegalStep("not a board edge: " + e.str());
    }
    if (state_[idx(e.u, e.v)] != EdgeState::Free) {
      throw IllegalStep("edge already claimed: " + e.str());
    }
    EdgeState st = s == Side::Maker ? EdgeState::Maker : EdgeState::Breaker;
    state_[idx(e.u, e.v)] = st;
    state_[idx(e.v, e.u)] = st;
    int side_i = static_cast<int>(s);
    ++degree_[side_i][e.u];
    ++degree_[side_i][e.v];
    claimed_[side_i].push_back(e);
    --free_count_;
  }

  int degree(Side s, Vertex v) const {
    return degree_[static_cast<int>(s)][v];
  }

  // Number of `s`-claimed edges from v into the given vertex set.
  int degree_into(Side s, Vertex v, const std::vector<Vertex>& set) const {
    EdgeState want = s == Side::Maker ? EdgeState::Maker : EdgeState::Breaker;
    int d = 0;
    for (Vertex w : set) {
      if (w != v && is_edge(v, w) && state_[idx(v, w)] == want) ++d;
    }
    return d;
  }

  long total_edges() const { return total_edges_; }
  long free_edges() const { return free_count_; }
  long claimed_count(Side s) const {
    return static_cast<long>(claimed_[static_cast<int>(s)].size());
  }
  const std::vector<Edge>& claimed_edges(Side s) const {
    return claimed_[static_cast<int>(s)];
  }

  // Snapshot of one player's claimed graph on the full vertex set.
  Graph side_graph(Side s) const {
    Graph g(nv_);
    for (const Edge& e : claimed_[static_cast<int>(s)]) g.add_edge(e.u, e.v);
    return g;
  }

  // All board edges in lexicographic order.
  std::vector<Edge> all_edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(total_edges_));
    for (Vertex u = 0; u < nv_; ++u) {
      for (Vertex v = u + 1; v < nv_; ++v) {
        if (is_edge(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each_free_edge(Fn&& fn) const {
    for (Vertex u = 0; u < nv_; ++u) {
      for (Vertex v = u + 1; v < nv_; ++v) {
        if (is_edge(u, v) && state_[idx(u, v)] == EdgeState::Free) {
          fn(Edge(u, v));
        }
      }
    }
  }

 private:
  Board(Kind kind, int a, int b) : kind_(kind) {
    if (kind_ == Kind::Complete) {
      if (a < 1) throw InvalidConfig("board needs at least one vertex");
      nv_ = a;
      left_ = a;
      right_ = 0;
      total_edges_ = static_cast<long>(a) * (a - 1) / 2;
    } else {
      if (a < 1 || b < 1) throw InvalidConfig("empty bipartition class");
      left_ = a;
      right_ = b;
      nv_ = a + b;
      total_edges_ = static_cast<long>(a) * b;
    }
    free_count_ = total_edges_;
    state_.assign(static_cast<size_t>(nv_) * nv_, EdgeState::Free);
    degree_[0].assign(nv_, 0);
    degree_[1].assign(nv_, 0);
  }

  size_t idx(Vertex u, Vertex v) const {
    return static_cast<size_t>(u) * nv_ + v;
  }

  Kind kind_;
  int nv_ = 0;
  int left_ = 0;
  int right_ = 0;
  long total_edges_ = 0;
  long free_count_ = 0;
  std::vector<EdgeState> state_;
  std::vector<int> degree_[2];
  std::vector<Edge> claimed_[2];
};

}  // namespace mbg
