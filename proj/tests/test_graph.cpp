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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "surfrig/error.hpp"
#include "surfrig/graph.hpp"

using namespace surfrig;

namespace {

Graph k5_minus_e() {
  Graph g = Graph::complete(5);
  return g.remove_edge(2, 3);
}

Graph two_triangles() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

}  // namespace

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  REQUIRE(g.m() == 3);
  CHECK(g.edges()[0] == Edge(0, 1));
  CHECK(g.edges()[1] == Edge(0, 2));
  CHECK(g.edges()[2] == Edge(1, 3));
  CHECK(g.edge_index(3, 1) == 2);
  CHECK_FALSE(g.edge_index(2, 3).has_value());
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 1);
}

TEST_CASE("edge addition and removal") {
  const Graph g = Graph::complete(4);
  CHECK(g.m() == 6);
  CHECK_THROWS_AS(g.add_edge(0, 1), InvalidArgument);
  const Graph h = g.remove_edge(1, 2);
  CHECK(h.m() == 5);
  CHECK_FALSE(h.has_edge(2, 1));
  CHECK_THROWS_AS(h.remove_edge(1, 2), InvalidArgument);
  CHECK(h.add_edge(2, 1) == g);
}

TEST_CASE("1-extension replaces an edge by a degree-3 vertex") {
  const Graph g = k5_minus_e();
  const Graph h = g.one_extension(Edge(0, 1), 2);
  CHECK(h.n() == 6);
  CHECK(h.m() == g.m() + 2);
  CHECK_FALSE(h.has_edge(0, 1));
  CHECK(h.degree(5) == 3);
  CHECK(h.has_edge(5, 0));
  CHECK(h.has_edge(5, 1));
  CHECK(h.has_edge(5, 2));
  CHECK_THROWS_AS(g.one_extension(Edge(2, 3), 0), InvalidArgument);
  CHECK_THROWS_AS(g.one_extension(Edge(0, 1), 1), InvalidArgument);
  CHECK_THROWS_AS(g.one_extension(Edge(0, 1), 9), InvalidArgument);
}

TEST_CASE("sparsity of small named graphs") {
  CHECK(is_k_tight(Graph::complete(4), 2));
  CHECK(is_k_tight(Graph::complete(3), 3));
  CHECK(is_k_sparse(Graph::complete(3), 3));
  CHECK_FALSE(is_k_sparse(Graph::complete(4), 3));
  CHECK_FALSE(is_k_sparse(k5_minus_e(), 2));
  CHECK(is_k_tight(k5_minus_e(), 1));
  CHECK(is_k_sparse(Graph(6, {}), 2));
  CHECK_THROWS_AS(is_k_sparse(Graph::complete(3), 0), InvalidArgument);
  CHECK_THROWS_AS(is_k_sparse(Graph::complete(3), 4), InvalidArgument);
}

TEST_CASE("pebble game agrees with subgraph enumeration") {
  std::mt19937_64 rng(2024);
  for (int k = 1; k <= 3; ++k) {
    int sparse_seen = 0;
    for (int t = 0; t < 150; ++t) {
      const std::size_t n = 2 + t % 6;
      const double p = 0.2 + 0.6 * (t % 7) / 6.0;
      const Graph g = oracle::random_graph(n, p, rng);
      const bool expected = oracle::brute_force_sparse(g, k);
      sparse_seen += expected;
      CHECK(is_k_sparse(g, k) == expected);
      CHECK(is_k_tight(g, k) == oracle::brute_force_tight(g, k));
    }
    CHECK(sparse_seen > 10);
    CHECK(sparse_seen < 140);
  }
}

TEST_CASE("vertex connectivity of named graphs") {
  CHECK(vertex_connectivity(Graph::complete(5)) == 4);
  CHECK(vertex_connectivity(two_triangles()) == 1);
  CHECK(vertex_connectivity(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == 2);
  CHECK(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(vertex_connectivity(k5_minus_e()) == 3);
  CHECK(is_k_connected(k5_minus_e(), 2));
  CHECK_FALSE(is_k_connected(two_triangles(), 2));
  CHECK(is_k_connected(two_triangles(), 1));
}

TEST_CASE("vertex connectivity agrees with separator enumeration") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 7;
    const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (t % 6), rng);
    CHECK(vertex_connectivity(g) == oracle::brute_force_connectivity(g));
  }
}
