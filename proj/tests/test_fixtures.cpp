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

#include <algorithm>
#include <set>

#include "surfrig/error.hpp"
#include "surfrig/fixtures.hpp"

using namespace surfrig;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<long> sorted_magnitudes(const std::vector<Rational>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(std::abs(x.get_num().get_si()));
  std::sort(out.begin(), out.end());
  return out;
}

// Weights listed against 1-based edge names, placed in graph edge order.
Stress<Rational> by_names(const BaseFixture& fx, std::initializer_list<std::pair<int, int>> names,
                          const std::vector<Rational>& omega) {
  Stress<Rational> s = Stress<Rational>::zero(fx.graph.m(), fx.graph.n());
  std::size_t k = 0;
  for (auto [a, b] : names) {
    const auto idx = fx.graph.edge_index(a - 1, b - 1);
    REQUIRE(idx.has_value());
    s.omega[*idx] = omega[k++];
  }
  s.lambda = fx.stress.lambda;
  return s;
}

}  // namespace

TEST_CASE("fixture names") {
  CHECK(fixture("K5_E").name == BaseGraph::K5MinusE);
  CHECK(fixture("H2").graph.n() == 7);
  CHECK_THROWS_AS(fixture("K6"), InvalidArgument);
  CHECK(to_string(BaseGraph::H1) == "H1");
}

TEST_CASE("fixture graphs") {
  const auto k5 = fixture(BaseGraph::K5MinusE);
  CHECK(k5.graph.m() == 9);
  CHECK_FALSE(k5.graph.has_edge(2, 3));
  const auto h1 = fixture(BaseGraph::H1);
  CHECK(h1.graph.m() == 11);
  CHECK(h1.graph.has_edge(0, 3));
  CHECK_FALSE(h1.graph.has_edge(0, 2));
  for (Vertex v = 0; v < h1.graph.n(); ++v) CHECK(h1.graph.degree(v) >= 3);
  const auto h2 = fixture(BaseGraph::H2);
  CHECK(h2.graph.m() == 13);
  for (Vertex v = 0; v < h2.graph.n(); ++v) CHECK(h2.graph.degree(v) >= 3);
  // Each base graph has m = 2n - 1.
  for (const auto& fx : {k5, h1, h2}) CHECK(fx.graph.m() == 2 * fx.graph.n() - 1);
}

TEST_CASE("fixture ranks and stresses are exact") {
  for (BaseGraph b : {BaseGraph::K5MinusE, BaseGraph::H1, BaseGraph::H2}) {
    const auto fx = fixture(b);
    const auto fw = fx.framework();
    CHECK(rank(surface_rigidity_matrix(fw)) == fx.expected_rigidity_rank);
    CHECK(fx.expected_rigidity_rank == 3 * fw.n() - 2);
    CHECK(verify_equilibrium(fw, fx.stress));
    CHECK(rank(stress_matrix(fw, fx.stress)) == fx.expected_stress_rank);
    CHECK(fx.expected_stress_rank == 3 * fw.n() - 6);
    CHECK(equilibrium_stress_basis(fw).size() == 1);
  }
}

TEST_CASE("K5-e reference weights") {
  const auto fx = fixture(BaseGraph::K5MinusE);
  CHECK(fx.stress.omega == ints({-369, 192, 153, 51, -96, -279, -138, 32, 45}));
  CHECK(fx.stress.lambda == ints({-270, -270, -192, 54, -6}));
  CHECK(stress_with_vertex_weights(fx.framework(), fx.stress.lambda) == fx.stress);
}

TEST_CASE("H1 weights are recomputed from the vertex weights") {
  const auto fx = fixture(BaseGraph::H1);
  CHECK(fx.stress.lambda == ints({-123, -39, 30, 123, -102, 28}));
  const auto derived = stress_with_vertex_weights(fx.framework(), fx.stress.lambda);
  CHECK(derived == fx.stress);
  // Same magnitudes as the reference list, which does not balance as written.
  const auto reference = ints({41, -246, 369, -123, 30, 48, 60, 50, -40, 492, 56});
  CHECK(sorted_magnitudes(derived.omega) == sorted_magnitudes(reference));
  const auto literal = by_names(
      fx, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}, {5, 6}},
      reference);
  CHECK_FALSE(verify_equilibrium(fx.framework(), literal));
}

TEST_CASE("H2 weights are recomputed from the vertex weights") {
  const auto fx = fixture(BaseGraph::H2);
  CHECK(fx.stress.lambda == ints({-174, -6, 24, 174, 372, -28, -252}));
  const auto derived = stress_with_vertex_weights(fx.framework(), fx.stress.lambda);
  CHECK(derived == fx.stress);
  // The twelve listed values all occur; the thirteenth weight is 174.
  const auto listed = ints({-58, 348, -522, -108, -24, -40, 14, 21, -696, 56, 588, -42});
  std::multiset<Rational> remaining(derived.omega.begin(), derived.omega.end());
  for (const auto& w : listed) {
    const auto it = std::find_if(remaining.begin(), remaining.end(),
                                 [&](const Rational& x) { return abs(x) == abs(w); });
    REQUIRE(it != remaining.end());
    remaining.erase(it);
  }
  REQUIRE(remaining.size() == 1);
  CHECK(*remaining.begin() == 174);
  CHECK(derived.omega[*fx.graph.edge_index(1, 3)] == 174);
}

TEST_CASE("vertex weights that no stress carries are rejected") {
  const auto fx = fixture(BaseGraph::K5MinusE);
  auto lambda = fx.stress.lambda;
  lambda[0] += 1;
  CHECK_THROWS_AS(stress_with_vertex_weights(fx.framework(), lambda), InvalidArgument);
  CHECK_THROWS_AS(stress_with_vertex_weights(fx.framework(), ints({1, 2})), InvalidArgument);
}
