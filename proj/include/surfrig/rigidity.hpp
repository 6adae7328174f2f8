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

#ifndef SURFRIG_RIGIDITY_HPP
#define SURFRIG_RIGIDITY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "surfrig/graph.hpp"
#include "surfrig/numeric.hpp"
#include "surfrig/surface.hpp"

namespace surfrig {

// A graph placed on a concentric family, vertex i on F_i.
template <Scalar T>
class Framework {
 public:
  // Throws InvalidArgument on size mismatches and DegenerateConfiguration
  // for points off their surface (beyond tol for floats), on the z-axis
  // (cylinder, cone) or at the origin (ellipsoid).
  Framework(Graph graph, std::vector<Point3<T>> points, SurfaceFamily<T> family,
            Tolerance tol = {});

  // Places the points and induces the family through them.
  static Framework induced(Graph graph, std::vector<Point3<T>> points, SurfaceKind kind,
                           T alpha = T(2), T beta = T(3));

  const Graph& graph() const { return graph_; }
  const std::vector<Point3<T>>& points() const { return points_; }
  const SurfaceFamily<T>& family() const { return family_; }
  SurfaceKind kind() const { return family_.kind(); }
  std::size_t n() const { return graph_.n(); }
  std::size_t m() const { return graph_.m(); }

 private:
  Graph graph_;
  std::vector<Point3<T>> points_;
  SurfaceFamily<T> family_;
};

// Edge weights omega (in graph edge order) and vertex weights lambda.
template <Scalar T>
struct Stress {
  std::vector<T> omega;
  std::vector<T> lambda;

  static Stress zero(std::size_t m, std::size_t n) {
    return {std::vector<T>(m, T(0)), std::vector<T>(n, T(0))};
  }
  // Splits a cokernel vector of length m + n.
  static Stress from_vector(std::size_t m, std::span<const T> v);
  std::vector<T> to_vector() const;
  bool is_zero() const;

  friend bool operator==(const Stress&, const Stress&) = default;
};

// (x_1..x_n, y_1..y_n, z_1..z_n): the ordering used by stress and
// configuration matrices. Rigidity matrices use per-vertex (x, y, z) blocks.
template <Scalar T>
std::vector<T> block_coordinates(std::span<const Point3<T>> points);

constexpr std::size_t block_index(std::size_t vertex, std::size_t axis, std::size_t n) {
  return axis * n + vertex;
}
constexpr std::size_t vertex_index(std::size_t vertex, std::size_t axis) {
  return 3 * vertex + axis;
}

// m x 3n, row for edge ij holds p_i - p_j at vertex i and p_j - p_i at j.
template <Scalar T>
Matrix<T> euclidean_rigidity_matrix(const Framework<T>& fw);

// (m + n) x 3n: the Euclidean rows stacked over the tangency block S(G,p).
template <Scalar T>
Matrix<T> surface_rigidity_matrix(const Framework<T>& fw);

template <Scalar T>
bool is_infinitesimally_rigid(const Framework<T>& fw, Tolerance tol = {});

template <Scalar T>
std::vector<Stress<T>> equilibrium_stress_basis(const Framework<T>& fw, Tolerance tol = {});

// (omega, lambda) . R_F = 0, exactly or to within
// eps * |(omega, lambda)| * |R_F|.
template <Scalar T>
bool verify_equilibrium(const Framework<T>& fw, const Stress<T>& s, Tolerance tol = {});

// Per-vertex equilibrium residuals sum_j w_ij (p_i - p_j) + lambda_i s_i.
template <Scalar T>
std::vector<Point3<T>> equilibrium_residuals(const Framework<T>& fw, const Stress<T>& s);

// Weighted Laplacian Omega(omega): off-diagonal -w_ij, diagonal sum_j w_ij.
template <Scalar T>
Matrix<T> laplacian(const Graph& g, std::span<const T> omega);

// 3n x 3n block-diagonal stress matrix diag(Omega + Lambda, Gamma, Sigma):
//   cylinder   Gamma = Omega + Lambda,        Sigma = Omega
//   cone       Gamma = Omega + Lambda,        Sigma = Omega - Delta
//   ellipsoid  Gamma = Omega + alpha Lambda,  Sigma = Omega + beta Lambda
// with Lambda = diag(lambda) and Delta = diag(lambda_i r_i).
template <Scalar T>
Matrix<T> stress_matrix(const Graph& g, const SurfaceFamily<T>& family, const Stress<T>& s);

template <Scalar T>
Matrix<T> stress_matrix(const Framework<T>& fw, const Stress<T>& s) {
  return stress_matrix(fw.graph(), fw.family(), s);
}

// mu x 3n. Cylinder rows: x | y | z | y in the x-block | x in the y-block |
// ones in the z-block. Cone drops the last row; ellipsoid keeps the first 3.
template <Scalar T>
Matrix<T> configuration_matrix(const Framework<T>& fw);

template <Scalar T>
bool is_fully_realised(const Framework<T>& fw, Tolerance tol = {});

// sum_ij w_ij |q_i - q_j|^2 + sum_i lambda_i k(q_i). The points need not lie
// on the family.
template <Scalar T>
T energy(std::span<const Point3<T>> points, const SurfaceFamily<T>& family, const Graph& g,
         const Stress<T>& s);

// 2 x^T Omega_F in block ordering (see block_coordinates).
template <Scalar T>
std::vector<T> energy_gradient(std::span<const Point3<T>> points,
                               const SurfaceFamily<T>& family, const Graph& g,
                               const Stress<T>& s);

// q = A p + t with A = [[a, b, 0], [c, d, 0], [0, 0, e]] and t = (0, 0, f).
template <Scalar T>
struct AffineParams {
  T a = T(1), b = T(0), c = T(0), d = T(1), e = T(1), f = T(0);
};

// Throws InvalidArgument when f != 0 on cones/ellipsoids or b, c != 0 on
// ellipsoids.
template <Scalar T>
std::vector<Point3<T>> affine_image(const Framework<T>& fw, const AffineParams<T>& params);

template <Scalar T>
struct RankedStress {
  Stress<T> stress;
  std::size_t omega_rank = 0;
};

// Random combinations of the equilibrium-stress basis, keeping the first
// one with the largest stress-matrix rank. Exact frameworks draw integer
// coefficients in [-9, 9]; float ones draw standard normals.
template <Scalar T>
RankedStress<T> max_rank_stress(const Framework<T>& fw, Rng& rng, std::size_t attempts,
                                Tolerance tol = {});

// Makes every edge weight nonzero while keeping rank Omega_F = 3n - mu, by
// adding small multiples of equilibrium stresses that load the zero edges.
// Cylinder and ellipsoid only.
template <Scalar T>
Stress<T> nonzero_stress_repair(const Framework<T>& fw, const Stress<T>& s, Tolerance tol = {});

struct SamplingOptions {
  std::size_t budget = 8;
  Tolerance tol{};
  double alpha = 2.0;
  double beta = 3.0;
};

// Random points and the family they induce; no rank checks.
Framework<double> random_realization(const Graph& g, SurfaceKind kind, Rng& rng,
                                     double alpha = 2.0, double beta = 3.0);

// Whether a random realization is infinitesimally rigid, retrying up to the
// budget before answering no.
bool is_generically_rigid(const Graph& g, SurfaceKind kind, Rng& rng,
                          const SamplingOptions& opts = {});

bool is_redundantly_rigid(const Graph& g, SurfaceKind kind, Rng& rng,
                          const SamplingOptions& opts = {});

// k-connected (k = 2 on cylinders and cones, 1 on ellipsoids) and redundantly
// rigid.
bool hendrickson_necessary(const Graph& g, SurfaceKind kind, Rng& rng,
                           const SamplingOptions& opts = {});

enum class CertificateRoute { None, MaxRankGeneric, PsdMaxRank };
enum class RouteRequest { Auto, MaxRankGeneric, PsdMaxRank };
enum class Genericity { Unverified, CallerAsserted, Sampled };

std::string_view to_string(CertificateRoute route);
std::string_view to_string(Genericity g);

struct CertifyOptions {
  RouteRequest route = RouteRequest::Auto;
  Genericity genericity = Genericity::Unverified;
  std::uint64_t seed = 0;
  std::size_t attempts = 20;
  Tolerance tol{};
};

// Sufficient-condition certificate for global rigidity. `route` is None when
// no sufficient condition was met; that is never a proof of flexibility.
template <Scalar T>
struct Certificate {
  SurfaceKind kind = SurfaceKind::Cylinder;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t rigidity_rank = 0;
  bool infinitesimally_rigid = false;
  std::size_t configuration_rank = 0;
  bool fully_realised = false;
  std::size_t stress_dimension = 0;
  std::size_t omega_rank = 0;
  std::size_t target_rank = 0;
  bool max_rank_found = false;
  bool psd = false;
  Stress<T> witness;
  CertificateRoute route = CertificateRoute::None;
  Genericity genericity = Genericity::Unverified;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  bool certified() const { return route != CertificateRoute::None; }
};

// Throws Unsupported when MaxRankGeneric is requested on a cone, and
// InvalidArgument when it is requested with n < 5.
template <Scalar T>
Certificate<T> certify_global_rigidity(const Framework<T>& fw, const CertifyOptions& opts = {});

}  // namespace surfrig

#endif  // SURFRIG_RIGIDITY_HPP
