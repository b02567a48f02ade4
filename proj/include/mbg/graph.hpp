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

#include <cassert>
#include <vector>

#include "mbg/core.hpp"

namespace mbg {

// Simple undirected graph on a fixed vertex set 0..n-1 with O(1) edge lookup.
class Graph {
 public:
  explicit Graph(int n) : n_(n), adj_(n), has_(static_cast<size_t>(n) * n, 0) {}

  int n() const { return n_; }
  long edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const {
    return u != v && has_[static_cast<size_t>(u) * n_ + v] != 0;
  }

  void add_edge(Vertex u, Vertex v) {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v);
    if (has_edge(u, v)) return;
    has_[static_cast<size_t>(u) * n_ + v] = 1;
    has_[static_cast<size_t>(v) * n_ + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
    ++edge_count_;
  }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  const std::vector<Edge>& edges() const { return edges_; }

  // Connected component ids; isolated vertices form their own components.
  std::vector<int> component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n_; ++s) {
      if (comp[s] != -1) continue;
      comp[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj_[x]) {
          if (comp[y] == -1) {
            comp[y] = next;
            stack.push_back(y);
          }
        }
      }
      ++next;
    }
    return comp;
  }

  // True iff every component is a path (possibly a single vertex).
  bool is_linear_forest() const {
    for (Vertex v = 0; v < n_; ++v) {
      if (degree(v) > 2) return false;
    }
    // No vertex of degree > 2, so components are paths or cycles. A cycle
    // component has as many edges as vertices; paths have one fewer.
    std::vector<int> comp = component_ids();
    int ncomp = 0;
    for (int c : comp) ncomp = std::max(ncomp, c + 1);
    std::vector<long> vcount(ncomp, 0), ecount(ncomp, 0);
    for (Vertex v = 0; v < n_; ++v) ++vcount[comp[v]];
    for (const Edge& e : edges_) ++ecount[comp[e.u]];
    for (int c = 0; c < ncomp; ++c) {
      if (ecount[c] != vcount[c] - 1) return false;
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<uint8_t> has_;
  std::vector<Edge> edges_;
  long edge_count_ = 0;
};

}  // namespace mbg
