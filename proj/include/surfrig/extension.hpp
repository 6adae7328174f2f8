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

#ifndef SURFRIG_EXTENSION_HPP
#define SURFRIG_EXTENSION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfrig/fixtures.hpp"
#include "surfrig/rigidity.hpp"

namespace surfrig {

template <Scalar T>
struct ExtendedFramework {
  Framework<T> framework;
  Stress<T> stress;
  // omega_e was zero, so the stress-matrix rank increment is not guaranteed.
  bool pivot_weight_zero = false;
};

// 1-extension on e = v1v2 with the new vertex v0 (index n) at the midpoint
// of p(v1) and p(v2); its radius is induced from that point. The stress is
// lifted with weight 2 omega_e on v0v1 and v0v2, 0 on v0v3 and lambda(v0) = 0.
// Throws DegenerateConfiguration when the midpoint cannot carry a surface.
template <Scalar T>
ExtendedFramework<T> geometric_one_extension(const Framework<T>& fw, const Stress<T>& s, Edge e,
                                             Vertex v3);

// Fresh random points with their induced family, resampled until the
// realization is infinitesimally rigid. Throws BudgetExhausted otherwise.
Framework<double> regenericize(const Graph& g, SurfaceKind kind, Rng& rng,
                               const SamplingOptions& opts = {});

struct StressedRealization {
  Framework<double> framework;
  RankedStress<double> stress;
  std::size_t samples = 0;  // realizations drawn, including this one
};

// Random realization that is infinitesimally rigid and carries a stress of
// rank 3n - mu, both at opts.tol. Each sample gets `attempts` random stress
// combinations. Throws BudgetExhausted after opts.budget samples.
StressedRealization generic_stressed_realization(const Graph& g, SurfaceKind kind, Rng& rng,
                                                 std::size_t attempts,
                                                 const SamplingOptions& opts = {});

struct ConstructionStep {
  enum class Kind { OneExtension, EdgeAddition };

  Kind kind = Kind::EdgeAddition;
  Edge edge;
  Vertex v3 = 0;  // one-extension only

  static ConstructionStep one_extension(Edge e, Vertex v3) { return {Kind::OneExtension, e, v3}; }
  static ConstructionStep edge_addition(Vertex u, Vertex v) {
    return {Kind::EdgeAddition, Edge(u, v), 0};
  }
};

struct StepRecord {
  std::size_t index = 0;  // 0 is the base graph
  std::string operation;  // "base", "one_extension" or "edge_addition"
  std::optional<ConstructionStep> step;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  // Ranks across the geometric 1-extension, before re-genericizing.
  std::optional<std::size_t> extension_rigidity_before;
  std::optional<std::size_t> extension_rigidity_after;
  std::optional<std::size_t> extension_omega_before;
  std::optional<std::size_t> extension_omega_after;
  // The increments failed on the incoming placement and were re-checked on a
  // fresh generic realization of the same graph.
  bool generic_retry = false;
  std::size_t rigidity_rank = 0;
  std::size_t omega_rank = 0;
  std::size_t target_rigidity_rank = 0;
  std::size_t target_omega_rank = 0;
  bool exact = false;
  bool passed = false;
  std::string message;
};

struct PipelineCertificate {
  BaseGraph base = BaseGraph::K5MinusE;
  SurfaceKind kind = SurfaceKind::Cylinder;
  std::uint64_t seed = 0;
  std::vector<StepRecord> steps;
  bool passed = false;
  std::optional<std::size_t> failed_step;
};

struct PipelineOptions {
  SurfaceKind kind = SurfaceKind::Cylinder;
  std::uint64_t seed = 0;
  std::size_t attempts = 20;
  SamplingOptions sampling{};
};

// Runs the base fixture through `steps`, checking infinitesimal rigidity and
// a stress of rank 3n - mu at every stage. The cylinder base stage uses the
// exact fixture; an ellipsoid run starts from a random realization of the
// base graph. Cones are refused (Unsupported). Stops at the first failing
// step.
PipelineCertificate certify_construction(BaseGraph base, const std::vector<ConstructionStep>& steps,
                                         const PipelineOptions& opts = {});

}  // namespace surfrig

#endif  // SURFRIG_EXTENSION_HPP
