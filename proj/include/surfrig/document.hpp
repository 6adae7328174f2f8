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

#ifndef SURFRIG_DOCUMENT_HPP
#define SURFRIG_DOCUMENT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfrig/extension.hpp"
#include "surfrig/rigidity.hpp"

namespace surfrig {

enum class Backend { Exact, Float };

inline constexpr const char* kSchemaVersion = "1";

// Framework JSON:
//   {"surface": {"kind": "cylinder" | "cone" | "ellipsoid",
//                "alpha": a, "beta": b,             (ellipsoid, default 2, 3)
//                "radii": [r_1, ...] | "induced"},  (default "induced")
//    "vertices": [[x, y, z], ...],
//    "labels": ["name", ...],                       (optional)
//    "edges": [[i, j], ...],                        (indices or labels)
//    "stress": {"omega": [...], "lambda": [...]}}   (optional, edge order
//                                                    as listed)
// Exact mode reads integers and "p/q" strings; float mode also reads
// fractional JSON numbers.
template <Scalar T>
struct FrameworkDocument {
  Framework<T> framework;
  std::optional<Stress<T>> stress;
};

using AnyFrameworkDocument = std::variant<FrameworkDocument<Rational>, FrameworkDocument<double>>;

// Throws ParseError for malformed documents, InvalidArgument and
// DegenerateConfiguration for invalid frameworks.
AnyFrameworkDocument parse_framework_document(const nlohmann::json& doc, Backend backend,
                                              Tolerance tol = {});

// Emits edges in graph order and radii explicitly. Exact values are written
// as "p/q" strings, so exact documents round-trip losslessly.
template <Scalar T>
nlohmann::json framework_to_json(const Framework<T>& fw, const Stress<T>* stress = nullptr);

// Accepts a framework document or {"n": N, "edges": [[i, j], ...]}.
Graph parse_graph_document(const nlohmann::json& doc);

// {"steps": [{"op": "one_extension", "edge": [u, v], "v3": w},
//            {"op": "edge_addition", "edge": [u, v]}]} or the bare array.
std::vector<ConstructionStep> parse_construction_steps(const nlohmann::json& doc);

template <Scalar T>
nlohmann::json scalar_to_json(const T& x);

// Reports ------------------------------------------------------------------

template <Scalar T>
nlohmann::json analyze_report(const Framework<T>& fw, const std::optional<Stress<T>>& stress,
                              Tolerance tol = {});

template <Scalar T>
nlohmann::json certificate_report(const Certificate<T>& cert);

nlohmann::json pipeline_report(const PipelineCertificate& cert);

nlohmann::json sparsity_report(const Graph& g, int k);

nlohmann::json hendrickson_report(const Graph& g, SurfaceKind kind, std::uint64_t seed,
                                  const SamplingOptions& opts = {});

}  // namespace surfrig

#endif  // SURFRIG_DOCUMENT_HPP
