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

#include "surfrig/fixtures.hpp"

#include <string>

namespace surfrig {

namespace {

std::vector<Rational> integers(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<Point3<Rational>> points(std::initializer_list<std::array<long, 3>> coords) {
  std::vector<Point3<Rational>> out;
  for (const auto& c : coords) out.push_back({Rational(c[0]), Rational(c[1]), Rational(c[2])});
  return out;
}

// Edges given with 1-based labels v1..vn.
Graph labelled_graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) out.emplace_back(a - 1, b - 1);
  return Graph(n, std::move(out));
}

BaseFixture k5_minus_e() {
  return {BaseGraph::K5MinusE,
          labelled_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}),
          points({{0, 1, 0}, {1, 1, 1}, {-1, -2, -1}, {2, 3, 4}, {5, 1, -1}}),
          {integers({-369, 192, 153, 51, -96, -279, -138, 32, 45}),
           integers({-270, -270, -192, 54, -6})},
          13,
          9};
}

// Edge weights are the exact cokernel element with the listed vertex
// weights; see stress_with_vertex_weights and the fixture tests.
BaseFixture h1() {
  return {BaseGraph::H1,
          labelled_graph(6, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6},
                             {4, 5}, {5, 6}}),
          points({{0, 1, 0}, {3, 1, 0}, {1, 4, 1}, {1, 2, 2}, {2, 2, 3}, {6, 0, 2}}),
          {integers({-41, -369, 246, -60, 123, -30, -48, -50, 40, -492, -56}),
           integers({-123, -39, 30, 123, -102, 28})},
          16,
          12};
}

BaseFixture h2() {
  return {BaseGraph::H2,
          labelled_graph(7, {{1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {3, 7},
                             {4, 5}, {5, 6}, {5, 7}, {6, 7}}),
          points({{0, 1, 0}, {3, 1, 0}, {1, 4, 1}, {1, 2, 2}, {2, 2, 3}, {6, 0, 2}, {3, 4, 3}}),
          {integers({-58, -522, 348, -24, 174, -108, -40, 14, 21, -696, 56, 588, -42}),
           integers({-174, -6, 24, 174, 372, -28, -252})},
          19,
          15};
}

}  // namespace

std::string_view to_string(BaseGraph b) {
  switch (b) {
    case BaseGraph::K5MinusE: return "K5_E";
    case BaseGraph::H1: return "H1";
    case BaseGraph::H2: return "H2";
  }
  return "unknown";
}

std::optional<BaseGraph> parse_base_graph(std::string_view name) {
  if (name == "K5_E" || name == "K5-e" || name == "K5_e") return BaseGraph::K5MinusE;
  if (name == "H1") return BaseGraph::H1;
  if (name == "H2") return BaseGraph::H2;
  return std::nullopt;
}

Framework<Rational> BaseFixture::framework() const {
  return Framework<Rational>::induced(graph, points, SurfaceKind::Cylinder);
}

BaseFixture fixture(BaseGraph name) {
  switch (name) {
    case BaseGraph::K5MinusE: return k5_minus_e();
    case BaseGraph::H1: return h1();
    case BaseGraph::H2: return h2();
  }
  throw InvalidArgument("unknown base graph");
}

BaseFixture fixture(std::string_view name) {
  const auto b = parse_base_graph(name);
  if (!b) throw InvalidArgument("unknown fixture \"" + std::string(name) + "\" (expected K5_E, H1 or H2)");
  return fixture(*b);
}

Stress<Rational> stress_with_vertex_weights(const Framework<Rational>& fw,
                                            const std::vector<Rational>& lambda) {
  if (lambda.size() != fw.n()) throw InvalidArgument("vertex weight count does not match");
  const auto basis = equilibrium_stress_basis(fw);
  if (basis.empty()) throw InvalidArgument("framework has no nonzero equilibrium stress");
  // Solve sum_k c_k basis_k.lambda = lambda for c.
  const std::size_t k = basis.size();
  Matrix<Rational> aug(fw.n(), k + 1);
  for (std::size_t i = 0; i < fw.n(); ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = basis[j].lambda[i];
    aug(i, k) = lambda[i];
  }
  const RowEchelon e = reduced_row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) {
    throw InvalidArgument("no equilibrium stress has these vertex weights");
  }
  if (e.pivots.size() != k) throw InvalidArgument("vertex weights do not determine the stress");
  Stress<Rational> out = Stress<Rational>::zero(fw.m(), fw.n());
  for (std::size_t j = 0; j < k; ++j) {
    const Rational c = e.reduced(j, k);
    for (std::size_t f = 0; f < fw.m(); ++f) out.omega[f] += c * basis[j].omega[f];
    for (std::size_t i = 0; i < fw.n(); ++i) out.lambda[i] += c * basis[j].lambda[i];
  }
  return out;
}

}  // namespace surfrig
