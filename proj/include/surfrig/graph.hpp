// Copyright 2026 The surfrig Authors.
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

#ifndef SURFRIG_GRAPH_HPP
#define SURFRIG_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace surfrig {

using Vertex = std::size_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex w) const { return u == w || v == w; }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. The edge list is kept sorted
// lexicographically, which fixes the row order of every rigidity matrix.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidArgument on self-loops, parallel edges or out-of-range
  // endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph complete(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  std::size_t degree(Vertex w) const;
  std::vector<std::vector<Vertex>> adjacency() const;

  Graph add_edge(Vertex a, Vertex b) const;
  Graph remove_edge(Vertex a, Vertex b) const;

  // Deletes e = v1v2 and joins a new vertex (index n) to v1, v2 and v3.
  Graph one_extension(Edge e, Vertex v3) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// (2,k)-sparsity by the pebble game with two pebbles per vertex.
// k must be 1, 2 or 3.
bool is_k_sparse(const Graph& g, int k);
bool is_k_tight(const Graph& g, int k);

// Vertex connectivity (n-1 for complete graphs).
std::size_t vertex_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

}  // namespace surfrig

#endif  // SURFRIG_GRAPH_HPP
