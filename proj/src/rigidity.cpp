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

#include "surfrig/rigidity.hpp"

#include <algorithm>
#include <cmath>

namespace surfrig {

namespace {

template <Scalar T>
bool is_negligible(const T& x, double scale, double eps) {
  if constexpr (kIsExact<T>) {
    return x == 0;
  } else {
    return std::abs(x) <= eps * scale;
  }
}

template <Scalar T>
double max_abs(std::span<const T> v) {
  double best = 0.0;
  for (const T& x : v) best = std::max(best, std::abs(to_double(x)));
  return best;
}

std::size_t target_stress_rank(std::size_t n, SurfaceKind kind) {
  const std::size_t mu = configuration_rows(kind);
  return 3 * n > mu ? 3 * n - mu : 0;
}

}  // namespace

// Framework ---------------------------------------------------------------

template <Scalar T>
Framework<T>::Framework(Graph graph, std::vector<Point3<T>> points, SurfaceFamily<T> family,
                        Tolerance tol)
    : graph_(std::move(graph)), points_(std::move(points)), family_(std::move(family)) {
  if (graph_.n() == 0) throw InvalidArgument("framework needs at least one vertex");
  if (points_.size() != graph_.n() || family_.size() != graph_.n()) {
    throw InvalidArgument("graph, points and surface radii disagree on the vertex count");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point3<T>& p = points_[i];
    const bool on_axis = p[0] == 0 && p[1] == 0;
    if (kind() != SurfaceKind::Ellipsoid && on_axis) {
      throw DegenerateConfiguration(i, "point lies on the z-axis");
    }
    if (kind() == SurfaceKind::Ellipsoid && on_axis && p[2] == 0) {
      throw DegenerateConfiguration(i, "point lies at the origin");
    }
    const T h = constraint_value(family_, i, p);
    double scale = 1.0;
    if constexpr (!kIsExact<T>) {
      const double r = std::abs(family_.radius(i));
      const double coef = 1.0 + r + std::abs(family_.alpha()) + std::abs(family_.beta());
      scale = 1.0 + r + coef * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    }
    if (!is_negligible(h, scale, tol.eps)) {
      throw DegenerateConfiguration(i, "point is not on its surface");
    }
  }
}

template <Scalar T>
Framework<T> Framework<T>::induced(Graph graph, std::vector<Point3<T>> points, SurfaceKind kind,
                                   T alpha, T beta) {
  auto family = induced_family<T>(kind, points, alpha, beta);
  return Framework(std::move(graph), std::move(points), std::move(family));
}

// Stress ------------------------------------------------------------------

template <Scalar T>
Stress<T> Stress<T>::from_vector(std::size_t m, std::span<const T> v) {
  if (v.size() < m) throw InvalidArgument("stress vector shorter than edge count");
  return {std::vector<T>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m)),
          std::vector<T>(v.begin() + static_cast<std::ptrdiff_t>(m), v.end())};
}

template <Scalar T>
std::vector<T> Stress<T>::to_vector() const {
  std::vector<T> v = omega;
  v.insert(v.end(), lambda.begin(), lambda.end());
  return v;
}

template <Scalar T>
bool Stress<T>::is_zero() const {
  auto zero = [](const T& x) { return x == 0; };
  return std::all_of(omega.begin(), omega.end(), zero) &&
         std::all_of(lambda.begin(), lambda.end(), zero);
}

template <Scalar T>
std::vector<T> block_coordinates(std::span<const Point3<T>> points) {
  const std::size_t n = points.size();
  std::vector<T> x(3 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 3; ++a) x[block_index(i, a, n)] = points[i][a];
  return x;
}

// Matrices ----------------------------------------------------------------

template <Scalar T>
Matrix<T> euclidean_rigidity_matrix(const Framework<T>& fw) {
  const auto& p = fw.points();
  Matrix<T> r(fw.m(), 3 * fw.n());
  for (std::size_t row = 0; row < fw.m(); ++row) {
    const Edge& e = fw.graph().edges()[row];
    for (std::size_t a = 0; a < 3; ++a) {
      const T d = p[e.u][a] - p[e.v][a];
      r(row, vertex_index(e.u, a)) = d;
      r(row, vertex_index(e.v, a)) = -d;
    }
  }
  return r;
}

template <Scalar T>
Matrix<T> surface_rigidity_matrix(const Framework<T>& fw) {
  const std::size_t m = fw.m();
  const std::size_t n = fw.n();
  const Matrix<T> euclid = euclidean_rigidity_matrix(fw);
  Matrix<T> r(m + n, 3 * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < 3 * n; ++j) r(i, j) = euclid(i, j);
  for (std::size_t i = 0; i < n; ++i) {
    const Point3<T> s = tangency_vector(fw.family(), i, fw.points()[i]);
    for (std::size_t a = 0; a < 3; ++a) r(m + i, vertex_index(i, a)) = s[a];
  }
  return r;
}

template <Scalar T>
bool is_infinitesimally_rigid(const Framework<T>& fw, Tolerance tol) {
  const std::size_t ell = fw.family().ell();
  const std::size_t full = 3 * fw.n() > ell ? 3 * fw.n() - ell : 0;
  return rank(surface_rigidity_matrix(fw), tol) == full;
}

template <Scalar T>
std::vector<Stress<T>> equilibrium_stress_basis(const Framework<T>& fw, Tolerance tol) {
  std::vector<Stress<T>> out;
  for (const auto& v : cokernel_basis(surface_rigidity_matrix(fw), tol))
    out.push_back(Stress<T>::from_vector(fw.m(), v));
  return out;
}

template <Scalar T>
std::vector<Point3<T>> equilibrium_residuals(const Framework<T>& fw, const Stress<T>& s) {
  if (s.omega.size() != fw.m() || s.lambda.size() != fw.n()) {
    throw InvalidArgument("stress size does not match the framework");
  }
  const auto& p = fw.points();
  std::vector<Point3<T>> res(fw.n(), Point3<T>{T(0), T(0), T(0)});
  for (std::size_t k = 0; k < fw.m(); ++k) {
    const Edge& e = fw.graph().edges()[k];
    for (std::size_t a = 0; a < 3; ++a) {
      const T d = s.omega[k] * (p[e.u][a] - p[e.v][a]);
      res[e.u][a] += d;
      res[e.v][a] -= d;
    }
  }
  for (std::size_t i = 0; i < fw.n(); ++i) {
    const Point3<T> t = tangency_vector(fw.family(), i, p[i]);
    for (std::size_t a = 0; a < 3; ++a) res[i][a] += s.lambda[i] * t[a];
  }
  return res;
}

template <Scalar T>
bool verify_equilibrium(const Framework<T>& fw, const Stress<T>& s, Tolerance tol) {
  if (s.omega.size() != fw.m() || s.lambda.size() != fw.n()) {
    throw InvalidArgument("stress size does not match the framework");
  }
  const Matrix<T> r = surface_rigidity_matrix(fw);
  const std::vector<T> v = s.to_vector();
  const std::vector<T> prod = left_multiply<T>(v, r);
  if constexpr (kIsExact<T>) {
    return std::all_of(prod.begin(), prod.end(), [](const T& x) { return x == 0; });
  } else {
    return norm2<T>(prod) <= tol.eps * norm2<T>(v) * frobenius_norm(r);
  }
}

template <Scalar T>
Matrix<T> laplacian(const Graph& g, std::span<const T> omega) {
  if (omega.size() != g.m()) throw InvalidArgument("edge weight count does not match the graph");
  Matrix<T> o(g.n(), g.n());
  for (std::size_t k = 0; k < g.m(); ++k) {
    const Edge& e = g.edges()[k];
    o(e.u, e.v) -= omega[k];
    o(e.v, e.u) -= omega[k];
    o(e.u, e.u) += omega[k];
    o(e.v, e.v) += omega[k];
  }
  return o;
}

template <Scalar T>
Matrix<T> stress_matrix(const Graph& g, const SurfaceFamily<T>& family, const Stress<T>& s) {
  const std::size_t n = g.n();
  if (s.lambda.size() != n || family.size() != n) {
    throw InvalidArgument("stress size does not match the framework");
  }
  const Matrix<T> o = laplacian<T>(g, s.omega);
  Matrix<T> big(3 * n, 3 * n);
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) big(b * n + i, b * n + j) = o(i, j);
  // Diagonal corrections per block.
  for (std::size_t i = 0; i < n; ++i) {
    const T& l = s.lambda[i];
    switch (family.kind()) {
      case SurfaceKind::Cylinder:
        big(i, i) += l;
        big(n + i, n + i) += l;
        break;
      case SurfaceKind::Cone:
        big(i, i) += l;
        big(n + i, n + i) += l;
        big(2 * n + i, 2 * n + i) -= l * family.radius(i);
        break;
      case SurfaceKind::Ellipsoid:
        big(i, i) += l;
        big(n + i, n + i) += family.alpha() * l;
        big(2 * n + i, 2 * n + i) += family.beta() * l;
        break;
    }
  }
  return big;
}

template <Scalar T>
Matrix<T> configuration_matrix(const Framework<T>& fw) {
  const std::size_t n = fw.n();
  const std::size_t mu = fw.family().mu();
  const auto& p = fw.points();
  Matrix<T> c(mu, 3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    c(0, block_index(i, 0, n)) = p[i][0];
    c(1, block_index(i, 1, n)) = p[i][1];
    c(2, block_index(i, 2, n)) = p[i][2];
    if (mu >= 5) {
      c(3, block_index(i, 0, n)) = p[i][1];
      c(4, block_index(i, 1, n)) = p[i][0];
    }
    if (mu >= 6) c(5, block_index(i, 2, n)) = T(1);
  }
  return c;
}

template <Scalar T>
bool is_fully_realised(const Framework<T>& fw, Tolerance tol) {
  return rank(configuration_matrix(fw), tol) == fw.family().mu();
}

// Energy ------------------------------------------------------------------

template <Scalar T>
T energy(std::span<const Point3<T>> points, const SurfaceFamily<T>& family, const Graph& g,
         const Stress<T>& s) {
  if (points.size() != g.n() || s.omega.size() != g.m() || s.lambda.size() != g.n()) {
    throw InvalidArgument("energy operands disagree in size");
  }
  T total(0);
  for (std::size_t k = 0; k < g.m(); ++k) {
    const Edge& e = g.edges()[k];
    T len2(0);
    for (std::size_t a = 0; a < 3; ++a) {
      const T d = points[e.u][a] - points[e.v][a];
      len2 += d * d;
    }
    total += s.omega[k] * len2;
  }
  for (std::size_t i = 0; i < g.n(); ++i) total += s.lambda[i] * energy_weight(family, i, points[i]);
  return total;
}

template <Scalar T>
std::vector<T> energy_gradient(std::span<const Point3<T>> points, const SurfaceFamily<T>& family,
                               const Graph& g, const Stress<T>& s) {
  if (points.size() != g.n()) throw InvalidArgument("energy operands disagree in size");
  const std::vector<T> x = block_coordinates(points);
  std::vector<T> grad = left_multiply<T>(x, stress_matrix(g, family, s));
  for (T& v : grad) v *= 2;
  return grad;
}

template <Scalar T>
std::vector<Point3<T>> affine_image(const Framework<T>& fw, const AffineParams<T>& q) {
  const SurfaceKind kind = fw.kind();
  if (kind != SurfaceKind::Cylinder && q.f != 0) {
    throw InvalidArgument("affine translation f must be 0 on cones and ellipsoids");
  }
  if (kind == SurfaceKind::Ellipsoid && (q.b != 0 || q.c != 0)) {
    throw InvalidArgument("affine parameters b and c must be 0 on ellipsoids");
  }
  std::vector<Point3<T>> out;
  out.reserve(fw.n());
  for (const Point3<T>& p : fw.points()) {
    out.push_back({T(q.a * p[0] + q.b * p[1]), T(q.c * p[0] + q.d * p[1]), T(q.e * p[2] + q.f)});
  }
  return out;
}

// Stress search -----------------------------------------------------------

template <Scalar T>
RankedStress<T> max_rank_stress(const Framework<T>& fw, Rng& rng, std::size_t attempts,
                                Tolerance tol) {
  if (attempts == 0) throw InvalidArgument("max_rank_stress needs at least one attempt");
  const auto basis = equilibrium_stress_basis(fw, tol);
  if (basis.empty()) return {Stress<T>::zero(fw.m(), fw.n()), 0};

  const std::size_t ceiling = 3 * fw.n() - rank(configuration_matrix(fw), tol);
  auto evaluate = [&](const Stress<T>& s) { return rank(stress_matrix(fw, s), tol); };

  if (basis.size() == 1) return {basis.front(), evaluate(basis.front())};

  RankedStress<T> best{Stress<T>::zero(fw.m(), fw.n()), 0};
  bool have = false;
  std::uniform_int_distribution<int> small(-9, 9);
  std::normal_distribution<double> gauss;
  const std::size_t len = fw.m() + fw.n();
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<T> v(len, T(0));
    bool nonzero = false;
    for (const Stress<T>& b : basis) {
      T c;
      if constexpr (kIsExact<T>) {
        c = small(rng);
      } else {
        c = gauss(rng);
      }
      if (c == 0) continue;
      nonzero = true;
      const std::vector<T> bv = b.to_vector();
      for (std::size_t k = 0; k < len; ++k) v[k] += c * bv[k];
    }
    if (!nonzero) continue;
    Stress<T> s = Stress<T>::from_vector(fw.m(), v);
    const std::size_t r = evaluate(s);
    if (!have || r > best.omega_rank) {
      best = {std::move(s), r};
      have = true;
    }
    if (best.omega_rank >= ceiling) break;
  }
  if (!have) best = {basis.front(), evaluate(basis.front())};
  return best;
}

template <Scalar T>
Stress<T> nonzero_stress_repair(const Framework<T>& fw, const Stress<T>& s, Tolerance tol) {
  if (fw.kind() == SurfaceKind::Cone) {
    throw Unsupported("nowhere-zero stress repair is defined for cylinders and ellipsoids only");
  }
  if (s.omega.size() != fw.m() || s.lambda.size() != fw.n()) {
    throw InvalidArgument("stress size does not match the framework");
  }
  // Float weights count as zero below sqrt(eps) of the largest weight, which
  // keeps them well above the rank threshold of later stress matrices.
  const double zero_eps = std::sqrt(tol.eps);
  auto is_zero_weight = [&](const std::vector<T>& omega, std::size_t k) {
    return is_negligible(omega[k], max_abs<T>(omega), zero_eps);
  };

  std::vector<std::size_t> zero_edges;
  for (std::size_t k = 0; k < fw.m(); ++k)
    if (is_zero_weight(s.omega, k)) zero_edges.push_back(k);
  if (zero_edges.empty()) return s;

  const auto basis = equilibrium_stress_basis(fw, tol);
  for (std::size_t k : zero_edges) {
    bool loaded = false;
    for (const auto& b : basis) loaded = loaded || !is_zero_weight(b.omega, k);
    if (!loaded) {
      const Edge& e = fw.graph().edges()[k];
      throw InvalidArgument("no equilibrium stress loads edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "); the framework minus this edge is not rigid");
    }
  }

  const std::size_t target = target_stress_rank(fw.n(), fw.kind());
  if (rank(stress_matrix(fw, s), tol) != target) {
    throw InvalidArgument("stress matrix rank must equal 3n - mu before repair");
  }

  Stress<T> current = s;
  for (std::size_t k : zero_edges) {
    if (!is_zero_weight(current.omega, k)) continue;
    // Basis element with the largest load on edge k.
    const Stress<T>* hat = nullptr;
    for (const auto& b : basis)
      if (!hat || std::abs(to_double(b.omega[k])) > std::abs(to_double(hat->omega[k]))) hat = &b;

    std::vector<bool> keep(fw.m());
    for (std::size_t f = 0; f < fw.m(); ++f) keep[f] = !is_zero_weight(current.omega, f);

    T c;
    if constexpr (kIsExact<T>) {
      c = 1;
    } else {
      const double scale = std::max(max_abs<T>(current.omega), 1e-300);
      c = scale / std::abs(hat->omega[k]);
    }
    bool done = false;
    for (int halving = 0; halving < 64 && !done; ++halving, c /= 2) {
      Stress<T> cand = current;
      for (std::size_t f = 0; f < fw.m(); ++f) cand.omega[f] += c * hat->omega[f];
      for (std::size_t i = 0; i < fw.n(); ++i) cand.lambda[i] += c * hat->lambda[i];
      bool ok = !is_zero_weight(cand.omega, k);
      for (std::size_t f = 0; ok && f < fw.m(); ++f)
        if (keep[f] && is_zero_weight(cand.omega, f)) ok = false;
      if (ok && rank(stress_matrix(fw, cand), tol) == target) {
        current = std::move(cand);
        done = true;
      }
    }
    if (!done) throw BudgetExhausted("could not repair a zero edge weight while keeping rank");
  }
  return current;
}

// Generic rigidity --------------------------------------------------------

Framework<double> random_realization(const Graph& g, SurfaceKind kind, Rng& rng, double alpha,
                                     double beta) {
  std::vector<Point3<double>> pts;
  pts.reserve(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) pts.push_back(random_generic_point(kind, rng));
  return Framework<double>::induced(g, std::move(pts), kind, alpha, beta);
}

bool is_generically_rigid(const Graph& g, SurfaceKind kind, Rng& rng,
                          const SamplingOptions& opts) {
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(opts.budget, 1); ++attempt) {
    const auto fw = random_realization(g, kind, rng, opts.alpha, opts.beta);
    if (is_infinitesimally_rigid(fw, opts.tol)) return true;
  }
  return false;
}

bool is_redundantly_rigid(const Graph& g, SurfaceKind kind, Rng& rng,
                          const SamplingOptions& opts) {
  if (g.m() == 0) return is_generically_rigid(g, kind, rng, opts);
  for (const Edge& e : g.edges())
    if (!is_generically_rigid(g.remove_edge(e.u, e.v), kind, rng, opts)) return false;
  return true;
}

bool hendrickson_necessary(const Graph& g, SurfaceKind kind, Rng& rng,
                           const SamplingOptions& opts) {
  const int k = kind == SurfaceKind::Ellipsoid ? 1 : 2;
  return is_k_connected(g, k) && is_redundantly_rigid(g, kind, rng, opts);
}

// Certificates ------------------------------------------------------------

std::string_view to_string(CertificateRoute route) {
  switch (route) {
    case CertificateRoute::None: return "NO_CERTIFICATE";
    case CertificateRoute::MaxRankGeneric: return "MAX_RANK_GENERIC";
    case CertificateRoute::PsdMaxRank: return "PSD_MAX_RANK";
  }
  return "NO_CERTIFICATE";
}

std::string_view to_string(Genericity g) {
  switch (g) {
    case Genericity::Unverified: return "unverified";
    case Genericity::CallerAsserted: return "caller-asserted";
    case Genericity::Sampled: return "sampled";
  }
  return "unverified";
}

template <Scalar T>
Certificate<T> certify_global_rigidity(const Framework<T>& fw, const CertifyOptions& opts) {
  const std::size_t n = fw.n();
  if (opts.route == RouteRequest::MaxRankGeneric) {
    if (fw.kind() == SurfaceKind::Cone) {
      throw Unsupported(
          "the generic max-rank certificate applies to cylinder and ellipsoid families only");
    }
    if (n < 5) throw InvalidArgument("the generic max-rank certificate needs n >= 5 vertices");
  }

  Certificate<T> cert;
  cert.kind = fw.kind();
  cert.n = n;
  cert.m = fw.m();
  cert.genericity = opts.genericity;
  cert.seed = opts.seed;
  cert.rigidity_rank = rank(surface_rigidity_matrix(fw), opts.tol);
  cert.infinitesimally_rigid = cert.rigidity_rank + fw.family().ell() == 3 * n;
  cert.configuration_rank = rank(configuration_matrix(fw), opts.tol);
  cert.fully_realised = cert.configuration_rank == fw.family().mu();
  cert.stress_dimension = fw.m() + n - cert.rigidity_rank;
  cert.target_rank = target_stress_rank(n, fw.kind());

  Rng rng(opts.seed);
  RankedStress<T> best = max_rank_stress(fw, rng, std::max<std::size_t>(opts.attempts, 1), opts.tol);
  cert.omega_rank = best.omega_rank;
  cert.witness = std::move(best.stress);
  cert.max_rank_found = cert.target_rank > 0 && cert.omega_rank == cert.target_rank;

  if (cert.max_rank_found) {
    const Matrix<T> omega = stress_matrix(fw, cert.witness);
    if (is_psd(omega, opts.tol)) {
      cert.psd = true;
    } else {
      Stress<T> flipped = cert.witness;
      for (T& w : flipped.omega) w = -w;
      for (T& l : flipped.lambda) l = -l;
      if (is_psd(stress_matrix(fw, flipped), opts.tol)) {
        cert.psd = true;
        cert.witness = std::move(flipped);
      }
    }
  }

  const bool big_enough = n >= 5;
  const bool max_rank_ok = fw.kind() != SurfaceKind::Cone && big_enough &&
                           opts.genericity != Genericity::Unverified && cert.max_rank_found;
  const bool psd_ok = big_enough && cert.fully_realised && cert.max_rank_found && cert.psd;

  if (!big_enough) cert.notes.push_back("fewer than 5 vertices: no sufficient condition applies");
  if (cert.stress_dimension == 0) cert.notes.push_back("the only equilibrium stress is zero");
  if (cert.stress_dimension > 0 && !cert.max_rank_found) {
    cert.notes.push_back("no equilibrium stress of rank 3n - mu found in " +
                         std::to_string(opts.attempts) + " attempts");
  }
  if (cert.max_rank_found && !cert.psd) cert.notes.push_back("stress matrix is indefinite");
  if (fw.kind() == SurfaceKind::Cone)
    cert.notes.push_back("generic max-rank route unavailable on cone families");
  if (opts.genericity == Genericity::Unverified && fw.kind() != SurfaceKind::Cone)
    cert.notes.push_back("genericity not asserted: generic max-rank route unavailable");

  switch (opts.route) {
    case RouteRequest::Auto:
      cert.route = max_rank_ok ? CertificateRoute::MaxRankGeneric
                   : psd_ok    ? CertificateRoute::PsdMaxRank
                               : CertificateRoute::None;
      break;
    case RouteRequest::MaxRankGeneric:
      cert.route = max_rank_ok ? CertificateRoute::MaxRankGeneric : CertificateRoute::None;
      break;
    case RouteRequest::PsdMaxRank:
      cert.route = psd_ok ? CertificateRoute::PsdMaxRank : CertificateRoute::None;
      break;
  }
  return cert;
}

// Instantiations ----------------------------------------------------------

#define SURFRIG_INSTANTIATE(T)                                                                  \
  template class Framework<T>;                                                                  \
  template struct Stress<T>;                                                                    \
  template std::vector<T> block_coordinates<T>(std::span<const Point3<T>>);                     \
  template Matrix<T> euclidean_rigidity_matrix<T>(const Framework<T>&);                         \
  template Matrix<T> surface_rigidity_matrix<T>(const Framework<T>&);                           \
  template bool is_infinitesimally_rigid<T>(const Framework<T>&, Tolerance);                    \
  template std::vector<Stress<T>> equilibrium_stress_basis<T>(const Framework<T>&, Tolerance);  \
  template bool verify_equilibrium<T>(const Framework<T>&, const Stress<T>&, Tolerance);        \
  template std::vector<Point3<T>> equilibrium_residuals<T>(const Framework<T>&,                 \
                                                           const Stress<T>&);                   \
  template Matrix<T> laplacian<T>(const Graph&, std::span<const T>);                            \
  template Matrix<T> stress_matrix<T>(const Graph&, const SurfaceFamily<T>&, const Stress<T>&); \
  template Matrix<T> configuration_matrix<T>(const Framework<T>&);                              \
  template bool is_fully_realised<T>(const Framework<T>&, Tolerance);                           \
  template T energy<T>(std::span<const Point3<T>>, const SurfaceFamily<T>&, const Graph&,       \
                       const Stress<T>&);                                                       \
  template std::vector<T> energy_gradient<T>(std::span<const Point3<T>>,                        \
                                             const SurfaceFamily<T>&, const Graph&,             \
                                             const Stress<T>&);                                 \
  template std::vector<Point3<T>> affine_image<T>(const Framework<T>&, const AffineParams<T>&); \
  template RankedStress<T> max_rank_stress<T>(const Framework<T>&, Rng&, std::size_t,           \
                                              Tolerance);                                       \
  template Stress<T> nonzero_stress_repair<T>(const Framework<T>&, const Stress<T>&,            \
                                              Tolerance);                                       \
  template Certificate<T> certify_global_rigidity<T>(const Framework<T>&, const CertifyOptions&);

SURFRIG_INSTANTIATE(Rational)
SURFRIG_INSTANTIATE(double)

#undef SURFRIG_INSTANTIATE

}  // namespace surfrig
