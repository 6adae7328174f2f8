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

// Independent reference implementations used to cross-check the library.

#ifndef SURFRIG_TESTS_ORACLES_HPP
#define SURFRIG_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "surfrig/graph.hpp"
#include "surfrig/rigidity.hpp"

namespace oracle {

using surfrig::Edge;
using surfrig::Graph;
using surfrig::Rational;

// Every vertex subset spanning at least one edge has m' <= 2n' - k.
inline bool brute_force_sparse(const Graph& g, int k) {
  const std::size_t n = g.n();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    long nv = __builtin_popcount(mask);
    long ne = 0;
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++ne;
    if (ne > 0 && ne > 2 * nv - k) return false;
  }
  return true;
}

inline bool brute_force_tight(const Graph& g, int k) {
  return brute_force_sparse(g, k) &&
         static_cast<long>(g.m()) == 2 * static_cast<long>(g.n()) - k;
}

inline bool connected_without(const Graph& g, std::uint32_t removed) {
  const std::size_t n = g.n();
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const Edge& e : g.edges())
    if (!(removed >> e.u & 1u) && !(removed >> e.v & 1u)) parent[find(e.u)] = find(e.v);
  int root = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (removed >> i & 1u) continue;
    if (root < 0) root = find(static_cast<int>(i));
    else if (find(static_cast<int>(i)) != root) return false;
  }
  return true;
}

// Smallest separating vertex set, n - 1 for complete graphs.
inline std::size_t brute_force_connectivity(const Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = n == 0 ? 0 : n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::size_t size = __builtin_popcount(mask);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(g, mask)) best = size;
  }
  return best;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Rational random_rational(std::mt19937_64& rng, int num = 20, int den = 9) {
  std::uniform_int_distribution<int> p(-num, num), q(1, den);
  Rational r(p(rng), q(rng));
  r.canonicalize();
  return r;
}

// Rational points none of which sits on the z-axis, at the origin or at z = 0.
inline std::vector<surfrig::Point3<Rational>> random_rational_points(std::size_t n,
                                                                     std::mt19937_64& rng) {
  std::vector<surfrig::Point3<Rational>> pts;
  while (pts.size() < n) {
    surfrig::Point3<Rational> p{random_rational(rng), random_rational(rng), random_rational(rng)};
    if (p[0] == 0 || p[1] == 0 || p[2] == 0) continue;
    pts.push_back(p);
  }
  return pts;
}

// Determinant by cofactor expansion, for small matrices.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    const Rational term = a[0][j] * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

// A symmetric matrix is PSD iff all principal minors are >= 0.
inline bool principal_minor_psd(const surfrig::Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) idx.push_back(i);
    std::vector<std::vector<Rational>> sub(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = m(idx[a], idx[b]);
    if (cofactor_det(sub) < 0) return false;
  }
  return true;
}

// Central difference of f at x along coordinate i.
inline double central_difference(const std::function<double(const std::vector<double>&)>& f,
                                 std::vector<double> x, std::size_t i, double h = 1e-6) {
  const double x0 = x[i];
  x[i] = x0 + h;
  const double fp = f(x);
  x[i] = x0 - h;
  const double fm = f(x);
  return (fp - fm) / (2 * h);
}

}  // namespace oracle

#endif  // SURFRIG_TESTS_ORACLES_HPP
