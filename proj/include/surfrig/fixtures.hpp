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

#ifndef SURFRIG_FIXTURES_HPP
#define SURFRIG_FIXTURES_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "surfrig/graph.hpp"
#include "surfrig/rigidity.hpp"

namespace surfrig {

// The three base graphs of the cylinder construction, with exact integer
// realizations on the cylinders they induce.
enum class BaseGraph { K5MinusE, H1, H2 };

std::string_view to_string(BaseGraph b);
std::optional<BaseGraph> parse_base_graph(std::string_view name);

struct BaseFixture {
  BaseGraph name;
  Graph graph;
  std::vector<Point3<Rational>> points;
  Stress<Rational> stress;
  std::size_t expected_rigidity_rank;
  std::size_t expected_stress_rank;

  Framework<Rational> framework() const;
};

BaseFixture fixture(BaseGraph name);
// Throws InvalidArgument for names other than K5_E, H1, H2.
BaseFixture fixture(std::string_view name);

// The equilibrium stress of `fw` whose vertex weights equal `lambda`.
// Throws InvalidArgument when no such stress exists or it is not unique.
Stress<Rational> stress_with_vertex_weights(const Framework<Rational>& fw,
                                            const std::vector<Rational>& lambda);

}  // namespace surfrig

#endif  // SURFRIG_FIXTURES_HPP
