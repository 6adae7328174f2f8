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

#include "oracles.hpp"
#include "surfrig/error.hpp"
#include "surfrig/numeric.hpp"

using namespace surfrig;

namespace {

Matrix<Rational> random_integer_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng,
                                       int range = 5) {
  std::uniform_int_distribution<int> d(-range, range);
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of r x k and k x c factors has rank at most k.
Matrix<Rational> low_rank(std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
  return random_integer_matrix(r, k, rng) * random_integer_matrix(k, c, rng);
}

Matrix<Rational> hilbert(std::size_t n) {
  Matrix<Rational> h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(1, i + j + 1);
  return h;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4/2") == -2);
  CHECK(parse_rational("17") == 17);
  CHECK(format_rational(Rational(6, -4)) == "-3/2");
  CHECK(format_rational(Rational(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("exact rank of structured matrices") {
  CHECK(rank(Matrix<Rational>::identity(7)) == 7);
  CHECK(rank(Matrix<Rational>(4, 6)) == 0);
  CHECK(rank(Matrix<Rational>()) == 0);
  CHECK(rank(hilbert(8)) == 8);
  std::mt19937_64 rng(11);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto m = low_rank(6, 7, k, rng);
    CHECK(rank(m) <= k);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("exact and float rank agree on small integer matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 1 + t % 5;
    const auto m = low_rank(6, 8, k, rng);
    CHECK(rank(m) == rank(to_double(m)));
  }
}

TEST_CASE("nullspace and cokernel satisfy rank-nullity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const auto m = low_rank(5 + t % 3, 7, 1 + t % 5, rng);
    const std::size_t r = rank(m);
    const auto ns = nullspace_basis(m);
    const auto ck = cokernel_basis(m);
    CHECK(ns.size() == m.cols() - r);
    CHECK(ck.size() == m.rows() - r);
    for (const auto& v : ns) {
      for (const auto& x : right_multiply(m, std::span<const Rational>(v))) CHECK(x == 0);
    }
    for (const auto& v : ck) {
      for (const auto& x : left_multiply(std::span<const Rational>(v), m)) CHECK(x == 0);
    }
    Matrix<Rational> stacked = Matrix<Rational>::from_rows(ns.empty() ? std::vector<std::vector<Rational>>{}
                                                                      : ns);
    CHECK(rank(stacked) == ns.size());
  }
}

TEST_CASE("exact nullspace vectors are primitive integer vectors") {
  std::mt19937_64 rng(3);
  const auto m = low_rank(4, 6, 2, rng);
  for (const auto& v : nullspace_basis(m)) {
    mpz_class g = 0;
    for (const auto& x : v) {
      CHECK(x.get_den() == 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    CHECK(g == 1);
  }
}

TEST_CASE("float nullspace is orthonormal and annihilated") {
  std::mt19937_64 rng(9);
  const auto m = to_double(low_rank(5, 8, 3, rng));
  const auto ns = nullspace_basis(m);
  REQUIRE(ns.size() == 5);
  for (std::size_t a = 0; a < ns.size(); ++a) {
    for (double x : right_multiply(m, std::span<const double>(ns[a]))) CHECK(std::abs(x) < 1e-9);
    for (std::size_t b = 0; b < ns.size(); ++b) {
      double dot = 0;
      for (std::size_t i = 0; i < ns[a].size(); ++i) dot += ns[a][i] * ns[b][i];
      CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("reduced row echelon form") {
  std::mt19937_64 rng(13);
  const auto m = low_rank(5, 6, 3, rng);
  const auto e = reduced_row_echelon(m);
  CHECK(e.pivots.size() == rank(m));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    CHECK(e.reduced(i, e.pivots[i]) == 1);
    for (std::size_t r = 0; r < e.reduced.rows(); ++r)
      if (r != i) CHECK(e.reduced(r, e.pivots[i]) == 0);
  }
}

TEST_CASE("PSD test matches the principal-minor criterion") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  int psd_count = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 4;
    Matrix<Rational> m(n, n);
    if (t % 2 == 0) {
      // Gram matrix, possibly rank deficient, with a random diagonal shift.
      const auto b = random_integer_matrix(1 + t % 3, n, rng, 2);
      m = b.transpose() * b;
      const int shift = d(rng);
      for (std::size_t i = 0; i < n; ++i) m(i, i) += Rational(shift, 4);
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
    }
    const bool expected = oracle::principal_minor_psd(m);
    psd_count += expected;
    CHECK(is_psd(m) == expected);
  }
  CHECK(psd_count > 20);
}

TEST_CASE("PSD edge cases") {
  CHECK(is_psd(Matrix<Rational>::from_rows({{0, 1}, {1, 0}})) == false);
  CHECK(is_psd(Matrix<Rational>::from_rows({{0, 0}, {0, 0}})));
  CHECK(is_psd(Matrix<Rational>::from_rows({{1, 1}, {1, 1}})));
  CHECK(is_psd(Matrix<double>::from_rows({{1, 1}, {1, 1}})));
  CHECK(is_psd(Matrix<double>::from_rows({{1, 0}, {0, -1e-3}})) == false);
  CHECK_THROWS_AS(is_psd(Matrix<Rational>::from_rows({{1, 2}, {0, 1}})), InvalidArgument);
  CHECK_THROWS_AS(is_psd(Matrix<Rational>(2, 3)), InvalidArgument);
}

TEST_CASE("matrix product shape checks") {
  CHECK_THROWS_AS(Matrix<Rational>(2, 3) * Matrix<Rational>(2, 3), InvalidArgument);
  CHECK_THROWS_AS(Matrix<Rational>::from_rows({{1, 2}, {3}}), InvalidArgument);
}
