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

#include "surfrig/document.hpp"
#include "surfrig/error.hpp"
#include "surfrig/extension.hpp"

using namespace surfrig;

namespace {

std::vector<ConstructionStep> random_steps(const Graph& base, std::size_t extensions,
                                           std::size_t additions, std::mt19937_64& rng) {
  std::vector<ConstructionStep> steps;
  Graph g = base;
  for (std::size_t s = 0; s < extensions; ++s) {
    const Edge e = g.edges()[rng() % g.m()];
    Vertex v3;
    do v3 = rng() % g.n();
    while (e.touches(v3));
    steps.push_back(ConstructionStep::one_extension(e, v3));
    g = g.one_extension(e, v3);
  }
  for (std::size_t s = 0; s < additions; ++s) {
    Vertex u, v;
    do {
      u = rng() % g.n();
      v = rng() % g.n();
    } while (u == v || g.has_edge(u, v));
    steps.push_back(ConstructionStep::edge_addition(u, v));
    g = g.add_edge(u, v);
  }
  return steps;
}

}  // namespace

TEST_CASE("geometric 1-extension of the K5-e fixture") {
  const auto fx = fixture(BaseGraph::K5MinusE);
  const auto fw = fx.framework();
  for (Vertex v3 : {2, 3, 4}) {
    const auto ext = geometric_one_extension(fw, fx.stress, Edge(0, 1), v3);
    const auto& out = ext.framework;
    CHECK(out.n() == 6);
    CHECK(out.m() == 11);
    CHECK_FALSE(ext.pivot_weight_zero);
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(out.points()[5][a] == (fw.points()[0][a] + fw.points()[1][a]) / 2);
    }
    CHECK(constraint_value(out.family(), 5, out.points()[5]) == 0);
    for (std::size_t i = 0; i < 5; ++i) CHECK(out.family().radius(i) == fw.family().radius(i));
    const Rational w = fx.stress.omega[*fw.graph().edge_index(0, 1)];
    CHECK(ext.stress.omega[*out.graph().edge_index(5, 0)] == 2 * w);
    CHECK(ext.stress.omega[*out.graph().edge_index(5, 1)] == 2 * w);
    CHECK(ext.stress.omega[*out.graph().edge_index(5, v3)] == 0);
    CHECK(ext.stress.lambda[5] == 0);
    CHECK(verify_equilibrium(out, ext.stress));
    CHECK(rank(stress_matrix(out, ext.stress)) == 12);
  }
  const auto ext = geometric_one_extension(fw, fx.stress, Edge(0, 1), 2);
  CHECK(rank(surface_rigidity_matrix(ext.framework)) == 16);
}

TEST_CASE("1-extension argument checks") {
  const auto fx = fixture(BaseGraph::K5MinusE);
  const auto fw = fx.framework();
  CHECK_THROWS_AS(geometric_one_extension(fw, fx.stress, Edge(2, 3), 0), InvalidArgument);
  CHECK_THROWS_AS(geometric_one_extension(fw, fx.stress, Edge(0, 1), 0), InvalidArgument);
  CHECK_THROWS_AS(geometric_one_extension(fw, Stress<Rational>::zero(2, 2), Edge(0, 1), 2),
                  InvalidArgument);
  // Midpoint on the axis.
  const Graph g = Graph::complete(3);
  const std::vector<Point3<Rational>> pts{{1, 0, 0}, {-1, 0, 5}, {0, 1, 0}};
  const auto tri = Framework<Rational>::induced(g, pts, SurfaceKind::Cylinder);
  try {
    (void)geometric_one_extension(tri, Stress<Rational>::zero(3, 3), Edge(0, 1), 2);
    FAIL("expected DegenerateConfiguration");
  } catch (const DegenerateConfiguration& e) {
    CHECK(e.vertex() == 3);
  }
}

TEST_CASE("float 1-extensions raise both ranks by three") {
  std::mt19937_64 pick(77);
  for (BaseGraph b : {BaseGraph::K5MinusE, BaseGraph::H1, BaseGraph::H2}) {
    const Graph g = fixture(b).graph;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Rng rng(seed);
      const auto fw = regenericize(g, SurfaceKind::Cylinder, rng);
      const auto best = max_rank_stress(fw, rng, 10);
      REQUIRE(best.omega_rank == 3 * fw.n() - 6);
      const Edge e = g.edges()[pick() % g.m()];
      Vertex v3;
      do v3 = pick() % g.n();
      while (e.touches(v3));
      const auto ext = geometric_one_extension(fw, best.stress, e, v3);
      CHECK(rank(surface_rigidity_matrix(ext.framework)) == rank(surface_rigidity_matrix(fw)) + 3);
      CHECK(rank(stress_matrix(ext.framework, ext.stress)) == best.omega_rank + 3);
      CHECK(verify_equilibrium(ext.framework, ext.stress));
    }
  }
}

TEST_CASE("regenericize gives up on flexible graphs") {
  Rng rng(1);
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(regenericize(path, SurfaceKind::Cylinder, rng), BudgetExhausted);
  const auto fw = regenericize(Graph::complete(4), SurfaceKind::Cylinder, rng);
  CHECK(is_infinitesimally_rigid(fw));
}

TEST_CASE("construction pipeline on the base graphs") {
  for (BaseGraph b : {BaseGraph::K5MinusE, BaseGraph::H1, BaseGraph::H2}) {
    const auto base = certify_construction(b, {});
    CHECK(base.passed);
    REQUIRE(base.steps.size() == 1);
    CHECK(base.steps[0].exact);
    CHECK(base.steps[0].omega_rank == base.steps[0].target_omega_rank);

    std::mt19937_64 rng(5);
    const auto steps = random_steps(fixture(b).graph, 3, 1, rng);
    PipelineOptions opts;
    opts.seed = 12;
    const auto cert = certify_construction(b, steps, opts);
    CHECK(cert.passed);
    CHECK_FALSE(cert.failed_step.has_value());
    REQUIRE(cert.steps.size() == 5);
    for (std::size_t i = 1; i <= 3; ++i) {
      const auto& r = cert.steps[i];
      CHECK(r.operation == "one_extension");
      CHECK(*r.extension_rigidity_after == *r.extension_rigidity_before + 3);
      CHECK(*r.extension_omega_after == *r.extension_omega_before + 3);
      CHECK(r.n == fixture(b).graph.n() + i);
    }
    CHECK(cert.steps[4].operation == "edge_addition");
    // Same seed, same certificate.
    CHECK(pipeline_report(certify_construction(b, steps, opts)) == pipeline_report(cert));
  }
}

TEST_CASE("construction pipeline failures are reported per step") {
  const auto bad = certify_construction(BaseGraph::K5MinusE,
                                        {ConstructionStep::one_extension(Edge(2, 3), 0)});
  CHECK_FALSE(bad.passed);
  CHECK(bad.failed_step == 1);
  CHECK_FALSE(bad.steps.back().message.empty());

  PipelineOptions opts;
  opts.kind = SurfaceKind::Ellipsoid;
  const auto ell = certify_construction(BaseGraph::H1, {}, opts);
  CHECK_FALSE(ell.passed);
  CHECK(ell.failed_step == 0);

  opts.kind = SurfaceKind::Cone;
  CHECK_THROWS_AS(certify_construction(BaseGraph::H1, {}, opts), Unsupported);
}
