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

#include "surfrig/surface.hpp"

#include <cmath>
#include <numbers>

namespace surfrig {

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Cylinder: return "cylinder";
    case SurfaceKind::Cone: return "cone";
    case SurfaceKind::Ellipsoid: return "ellipsoid";
  }
  return "unknown";
}

std::optional<SurfaceKind> parse_surface_kind(std::string_view name) {
  if (name == "cylinder" || name == "Y") return SurfaceKind::Cylinder;
  if (name == "cone" || name == "C") return SurfaceKind::Cone;
  if (name == "ellipsoid" || name == "E") return SurfaceKind::Ellipsoid;
  return std::nullopt;
}

Point3<double> random_point(const SurfaceFamily<double>& f, std::size_t i, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double r = f.radius(i);
  switch (f.kind()) {
    case SurfaceKind::Cylinder: {
      const double t = angle(rng);
      const double s = std::sqrt(r);
      const double z = std::uniform_real_distribution<double>(-s, s)(rng);
      return {s * std::cos(t), s * std::sin(t), z};
    }
    case SurfaceKind::Cone: {
      const double t = angle(rng);
      double z = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
      if (std::bernoulli_distribution(0.5)(rng)) z = -z;
      const double rho = std::sqrt(r) * std::abs(z);
      return {rho * std::cos(t), rho * std::sin(t), z};
    }
    case SurfaceKind::Ellipsoid: {
      std::normal_distribution<double> gauss;
      double u[3];
      double len = 0.0;
      do {
        for (double& c : u) c = gauss(rng);
        len = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
      } while (len < 1e-12);
      return {std::sqrt(r) * u[0] / len, std::sqrt(r / f.alpha()) * u[1] / len,
              std::sqrt(r / f.beta()) * u[2] / len};
    }
  }
  return {};
}

Point3<double> random_generic_point(SurfaceKind kind, Rng& rng) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (;;) {
    const Point3<double> p{box(rng), box(rng), box(rng)};
    const double planar = p[0] * p[0] + p[1] * p[1];
    switch (kind) {
      case SurfaceKind::Cylinder:
        if (planar >= 0.01) return p;
        break;
      case SurfaceKind::Cone:
        if (planar >= 0.01 && std::abs(p[2]) >= 0.1) return p;
        break;
      case SurfaceKind::Ellipsoid:
        if (planar + p[2] * p[2] >= 0.01) return p;
        break;
    }
  }
}

}  // namespace surfrig
