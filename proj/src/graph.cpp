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

#include "surfrig/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "surfrig/error.hpp"

namespace surfrig {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n_) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") has an endpoint outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("parallel edge (" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + ")");
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge e(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::degree(Vertex w) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [w](const Edge& e) { return e.touches(w); }));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

Graph Graph::add_edge(Vertex a, Vertex b) const {
  if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) {
    throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") already present");
  }
  std::vector<Edge> edges = edges_;
  edges.emplace_back(a, b);
  return Graph(n_, std::move(edges));
}

Graph Graph::remove_edge(Vertex a, Vertex b) const {
  const auto idx = edge_index(a, b);
  if (!idx) {
    throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") not present");
  }
  std::vector<Edge> edges = edges_;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(*idx));
  return Graph(n_, std::move(edges));
}

Graph Graph::one_extension(Edge e, Vertex v3) const {
  if (!has_edge(e.u, e.v)) {
    throw InvalidArgument("1-extension edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") not present");
  }
  if (v3 >= n_) throw InvalidArgument("1-extension vertex " + std::to_string(v3) + " out of range");
  if (e.touches(v3)) {
    throw InvalidArgument("1-extension third vertex " + std::to_string(v3) +
                          " coincides with an endpoint");
  }
  const Vertex v0 = n_;
  std::vector<Edge> edges;
  edges.reserve(edges_.size() + 2);
  for (const Edge& f : edges_)
    if (f != e) edges.push_back(f);
  edges.emplace_back(e.u, v0);
  edges.emplace_back(e.v, v0);
  edges.emplace_back(v3, v0);
  return Graph(n_ + 1, std::move(edges));
}

namespace {

// Pebble game for (2,l)-sparsity: each vertex starts with two pebbles and
// an accepted edge is oriented away from the vertex that paid for it.
class PebbleGame {
 public:
  PebbleGame(std::size_t n, int l) : l_(l), pebbles_(n, 2), out_(n) {}

  bool insert(Vertex u, Vertex v) {
    while (pebbles_[u] + pebbles_[v] < l_ + 1) {
      if (pebbles_[u] < 2 && fetch(u, v)) continue;
      if (pebbles_[v] < 2 && fetch(v, u)) continue;
      return false;
    }
    if (pebbles_[u] > 0) {
      --pebbles_[u];
      out_[u].push_back(v);
    } else {
      --pebbles_[v];
      out_[v].push_back(u);
    }
    return true;
  }

 private:
  // Moves a free pebble to `root` along a directed path, never taking the
  // pebbles held by `keep`.
  bool fetch(Vertex root, Vertex keep) {
    const std::size_t n = pebbles_.size();
    std::vector<Vertex> parent(n, n);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : out_[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        if (y != keep && pebbles_[y] > 0) {
          for (Vertex w = y; w != root; w = parent[w]) reverse(parent[w], w);
          --pebbles_[y];
          ++pebbles_[root];
          return true;
        }
        stack.push_back(y);
      }
    }
    return false;
  }

  void reverse(Vertex from, Vertex to) {
    auto& row = out_[from];
    row.erase(std::find(row.begin(), row.end(), to));
    out_[to].push_back(from);
  }

  int l_;
  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
};

void require_sparsity_k(int k) {
  if (k < 1 || k > 3) throw InvalidArgument("sparsity parameter k must be 1, 2 or 3");
}

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
// by unit-capacity augmenting paths on the split-vertex network.
std::size_t local_connectivity(const std::vector<std::vector<Vertex>>& adj, Vertex s, Vertex t) {
  const std::size_t n = adj.size();
  // Node 2v is v_in, 2v+1 is v_out.
  struct Arc {
    std::size_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(2 * n);
  auto add = [&](std::size_t a, std::size_t b, int cap) {
    out[a].push_back(arcs.size());
    arcs.push_back({b, cap});
    out[b].push_back(arcs.size());
    arcs.push_back({a, 0});
  };
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  for (Vertex v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : adj[v]) add(2 * v + 1, 2 * w, 1);

  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  for (;;) {
    std::vector<std::size_t> via(2 * n, arcs.size());
    std::vector<bool> seen(2 * n, false);
    std::queue<std::size_t> q;
    q.push(source);
    seen[source] = true;
    while (!q.empty() && !seen[sink]) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t a : out[x]) {
        if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
          seen[arcs[a].to] = true;
          via[arcs[a].to] = a;
          q.push(arcs[a].to);
        }
      }
    }
    if (!seen[sink]) return flow;
    for (std::size_t x = sink; x != source;) {
      const std::size_t a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      x = arcs[a ^ 1].to;
    }
    ++flow;
  }
}

}  // namespace

bool is_k_sparse(const Graph& g, int k) {
  require_sparsity_k(k);
  PebbleGame game(g.n(), k);
  for (const Edge& e : g.edges())
    if (!game.insert(e.u, e.v)) return false;
  return true;
}

bool is_k_tight(const Graph& g, int k) {
  require_sparsity_k(k);
  const auto target = 2 * static_cast<long long>(g.n()) - k;
  return static_cast<long long>(g.m()) == target && is_k_sparse(g, k);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.n();
  if (n == 0) return 0;
  if (g.m() == n * (n - 1) / 2) return n - 1;
  const auto adj = g.adjacency();
  std::size_t best = n - 1;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(adj, s, t));
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("connectivity parameter k must be at least 1");
  return vertex_connectivity(g) >= static_cast<std::size_t>(k);
}

}  // namespace surfrig
