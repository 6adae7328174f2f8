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

#ifndef SURFRIG_SURFACE_HPP
#define SURFRIG_SURFACE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surfrig/error.hpp"
#include "surfrig/numeric.hpp"

namespace surfrig {

using Rng = std::mt19937_64;

template <Scalar T>
using Point3 = std::array<T, 3>;

// Concentric families: cylinders x^2+y^2 = r_i, cones x^2+y^2 = r_i z^2,
// ellipsoids x^2 + alpha y^2 + beta z^2 = r_i.
enum class SurfaceKind { Cylinder, Cone, Ellipsoid };

std::string_view to_string(SurfaceKind kind);
std::optional<SurfaceKind> parse_surface_kind(std::string_view name);

// Dimension of the continuous isometry group of the family (l).
constexpr std::size_t isometry_dimension(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Cylinder: return 2;
    case SurfaceKind::Cone: return 1;
    case SurfaceKind::Ellipsoid: return 0;
  }
  return 0;
}

// Number of rows of the configuration matrix (mu).
constexpr std::size_t configuration_rows(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Cylinder: return 6;
    case SurfaceKind::Cone: return 5;
    case SurfaceKind::Ellipsoid: return 3;
  }
  return 0;
}

template <Scalar T>
class SurfaceFamily {
 public:
  static SurfaceFamily cylinder(std::vector<T> radii) {
    return SurfaceFamily(SurfaceKind::Cylinder, std::move(radii), T(0), T(0));
  }
  static SurfaceFamily cone(std::vector<T> radii) {
    return SurfaceFamily(SurfaceKind::Cone, std::move(radii), T(0), T(0));
  }
  // Requires 1 < alpha < beta.
  static SurfaceFamily ellipsoid(T alpha, T beta, std::vector<T> radii) {
    if (!(T(1) < alpha && alpha < beta)) {
      throw InvalidArgument("ellipsoid parameters must satisfy 1 < alpha < beta");
    }
    return SurfaceFamily(SurfaceKind::Ellipsoid, std::move(radii), alpha, beta);
  }
  static SurfaceFamily make(SurfaceKind kind, std::vector<T> radii, T alpha = T(2),
                            T beta = T(3)) {
    switch (kind) {
      case SurfaceKind::Cylinder: return cylinder(std::move(radii));
      case SurfaceKind::Cone: return cone(std::move(radii));
      case SurfaceKind::Ellipsoid: return ellipsoid(alpha, beta, std::move(radii));
    }
    throw InvalidArgument("unknown surface kind");
  }

  SurfaceKind kind() const { return kind_; }
  std::size_t size() const { return radii_.size(); }
  const std::vector<T>& radii() const { return radii_; }
  const T& radius(std::size_t i) const { return radii_.at(i); }
  // Meaningful for ellipsoids only.
  const T& alpha() const { return alpha_; }
  const T& beta() const { return beta_; }

  std::size_t ell() const { return isometry_dimension(kind_); }
  std::size_t mu() const { return configuration_rows(kind_); }

  // Same kind and parameters, different radii.
  SurfaceFamily with_radii(std::vector<T> radii) const {
    return SurfaceFamily(kind_, std::move(radii), alpha_, beta_);
  }

  friend bool operator==(const SurfaceFamily&, const SurfaceFamily&) = default;

 private:
  SurfaceFamily(SurfaceKind kind, std::vector<T> radii, T alpha, T beta)
      : kind_(kind), radii_(std::move(radii)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    for (std::size_t i = 0; i < radii_.size(); ++i) {
      if (!(radii_[i] > 0)) throw InvalidArgument("radius r_" + std::to_string(i) + " must be positive");
    }
  }

  SurfaceKind kind_;
  std::vector<T> radii_;
  T alpha_;
  T beta_;
};

// h_i(pt); zero iff pt lies on F_i.
template <Scalar T>
T constraint_value(const SurfaceFamily<T>& f, std::size_t i, const Point3<T>& p) {
  const T& r = f.radius(i);
  switch (f.kind()) {
    case SurfaceKind::Cylinder: return p[0] * p[0] + p[1] * p[1] - r;
    case SurfaceKind::Cone: return p[0] * p[0] + p[1] * p[1] - r * p[2] * p[2];
    case SurfaceKind::Ellipsoid:
      return p[0] * p[0] + f.alpha() * p[1] * p[1] + f.beta() * p[2] * p[2] - r;
  }
  return T(0);
}

// s_i(pt) = grad h_i / 2.
template <Scalar T>
Point3<T> tangency_vector(const SurfaceFamily<T>& f, std::size_t i, const Point3<T>& p) {
  switch (f.kind()) {
    case SurfaceKind::Cylinder: return {p[0], p[1], T(0)};
    case SurfaceKind::Cone: return {p[0], p[1], T(-f.radius(i) * p[2])};
    case SurfaceKind::Ellipsoid: return {p[0], T(f.alpha() * p[1]), T(f.beta() * p[2])};
  }
  return {};
}

// k(pt), the per-vertex term of the energy function.
template <Scalar T>
T energy_weight(const SurfaceFamily<T>& f, std::size_t i, const Point3<T>& p) {
  switch (f.kind()) {
    case SurfaceKind::Cylinder: return p[0] * p[0] + p[1] * p[1];
    case SurfaceKind::Cone: return p[0] * p[0] + p[1] * p[1] - f.radius(i) * p[2] * p[2];
    case SurfaceKind::Ellipsoid:
      return p[0] * p[0] + f.alpha() * p[1] * p[1] + f.beta() * p[2] * p[2];
  }
  return T(0);
}

// The unique family of the given kind through `points`. Throws
// DegenerateConfiguration for points on the z-axis (cylinder, cone), in the
// plane z = 0 (cone) or at the origin (ellipsoid).
template <Scalar T>
SurfaceFamily<T> induced_family(SurfaceKind kind, std::span<const Point3<T>> points,
                                T alpha = T(2), T beta = T(3)) {
  std::vector<T> radii;
  radii.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point3<T>& p = points[i];
    const T planar = p[0] * p[0] + p[1] * p[1];
    switch (kind) {
      case SurfaceKind::Cylinder:
        if (planar == 0) throw DegenerateConfiguration(i, "point lies on the z-axis");
        radii.push_back(planar);
        break;
      case SurfaceKind::Cone:
        if (planar == 0) throw DegenerateConfiguration(i, "point lies on the z-axis");
        if (p[2] == 0) throw DegenerateConfiguration(i, "cone point has z = 0");
        radii.push_back(planar / (p[2] * p[2]));
        break;
      case SurfaceKind::Ellipsoid: {
        const T value = planar + (alpha - 1) * p[1] * p[1] + beta * p[2] * p[2];
        if (p[0] == 0 && p[1] == 0 && p[2] == 0)
          throw DegenerateConfiguration(i, "point lies at the origin");
        radii.push_back(value);
        break;
      }
    }
  }
  return SurfaceFamily<T>::make(kind, std::move(radii), alpha, beta);
}

// A random point on F_i. Cylinder: (sqrt(r) cos t, sqrt(r) sin t, z) with t
// uniform on [0, 2pi) and z uniform on [-sqrt(r), sqrt(r)]. Cone: the circle
// of radius sqrt(r)|z| at height z, with |z| uniform on [0.1, 1] and a random
// sign. Ellipsoid: a uniform direction u scaled to
// (sqrt(r) u_x, sqrt(r/alpha) u_y, sqrt(r/beta) u_z).
Point3<double> random_point(const SurfaceFamily<double>& f, std::size_t i, Rng& rng);

// A random point of R^3 from which a non-degenerate family of the given kind
// can be induced: uniform in [-1, 1]^3, rejecting points within 0.1 of the
// z-axis (cylinder, cone), with |z| < 0.1 (cone) or within 0.1 of the origin
// (ellipsoid).
Point3<double> random_generic_point(SurfaceKind kind, Rng& rng);

}  // namespace surfrig

#endif  // SURFRIG_SURFACE_HPP
