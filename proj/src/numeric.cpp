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

#include "surfrig/numeric.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <utility>

namespace surfrig {

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  bool ok = i > num_begin;
  if (ok && i < text.size()) {
    ok = text[i] == '/';
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    ok = ok && i > den_begin && i == text.size();
  }
  if (!ok) throw ParseError("not a rational number: \"" + text + "\"");
  Rational q;
  if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw ParseError("not a rational number: \"" + text + "\"");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator: \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

Matrix<double> to_double(const Matrix<Rational>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

namespace {

// Index of the entry of largest magnitude in column `col` among rows
// [from, rows); first one wins ties. Returns rows when the column is zero.
template <class Get>
std::size_t choose_pivot(std::size_t from, std::size_t rows, Get&& get) {
  std::size_t best = rows;
  for (std::size_t i = from; i < rows; ++i) {
    const auto& v = get(i);
    if (v == 0) continue;
    if (best == rows || abs(v) > abs(get(best))) best = i;
  }
  return best;
}

std::vector<Rational> primitive(std::vector<Rational> v) {
  mpz_class den_lcm = 1;
  for (const Rational& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                      x.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const Rational& x : v) {
    mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  for (Rational& x : v) {
    x = Rational(x.get_num() * (den_lcm / x.get_den()), num_gcd);
    x.canonicalize();
  }
  return v;
}

Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

struct SvdRank {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd;
  std::size_t rank = 0;
};

SvdRank float_svd(const Matrix<double>& m, Tolerance tol, unsigned options) {
  SvdRank out{Eigen::JacobiSVD<Eigen::MatrixXd>(to_eigen(m), options), 0};
  const auto& sv = out.svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return out;
  const double threshold =
      tol.eps * static_cast<double>(std::max(m.rows(), m.cols())) * sv(0);
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++out.rank;
  return out;
}

void require_symmetric(const Matrix<Rational>& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw InvalidArgument("matrix is not symmetric");
}

void require_symmetric(const Matrix<double>& m, Tolerance tol) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
  const double slack = tol.eps * m.max_abs();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > slack)
        throw InvalidArgument("matrix is not symmetric");
}

}  // namespace

RowEchelon reduced_row_echelon(const Matrix<Rational>& m) {
  RowEchelon out{m, {}};
  Matrix<Rational>& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    const std::size_t p =
        choose_pivot(r, a.rows(), [&](std::size_t i) -> const Rational& { return a(i, col); });
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(col);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix<Rational>& m, Tolerance) {
  // Clear denominators row by row, then run Bareiss on integers.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (const Rational& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    const std::size_t p =
        choose_pivot(r, m.rows(), [&](std::size_t i) -> const mpz_class& { return a[i][col]; });
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix<double>& m, Tolerance tol) {
  if (m.empty()) return 0;
  return float_svd(m, tol, 0).rank;
}

std::vector<std::vector<Rational>> nullspace_basis(const Matrix<Rational>& m,
                                                   Tolerance) {
  const RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

std::vector<std::vector<double>> nullspace_basis(const Matrix<double>& m,
                                                 Tolerance tol) {
  std::vector<std::vector<double>> basis;
  if (m.cols() == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<double> v(m.cols(), 0.0);
      v[j] = 1.0;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  const SvdRank s = float_svd(m, tol, Eigen::ComputeFullV);
  const Eigen::MatrixXd& v = s.svd.matrixV();
  for (Eigen::Index c = static_cast<Eigen::Index>(s.rank); c < v.cols(); ++c)
    basis.emplace_back(v.col(c).data(), v.col(c).data() + v.rows());
  return basis;
}

std::vector<std::vector<Rational>> cokernel_basis(const Matrix<Rational>& m,
                                                  Tolerance tol) {
  return nullspace_basis(m.transpose(), tol);
}

std::vector<std::vector<double>> cokernel_basis(const Matrix<double>& m,
                                                Tolerance tol) {
  return nullspace_basis(m.transpose(), tol);
}

bool is_psd(const Matrix<Rational>& m, Tolerance) {
  require_symmetric(m);
  Matrix<Rational> a = m;
  const std::size_t n = a.rows();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Symmetric pivoting on the largest remaining diagonal entry.
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && (p == n || a(i, i) > a(p, p))) p = i;
    if (a(p, p) < 0) return false;
    if (a(p, p) == 0) {
      // All remaining diagonal entries are zero; a PSD matrix must then
      // vanish on the remaining block.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a(i, j) != 0) return false;
      return true;
    }
    done[p] = true;
    const Rational d = a(p, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p) == 0) continue;
      const Rational f = a(i, p) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) a(i, j) -= f * a(p, j);
    }
  }
  return true;
}

bool is_psd(const Matrix<double>& m, Tolerance tol) {
  require_symmetric(m, tol);
  if (m.rows() == 0) return true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(to_eigen(m),
                                                     Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  const double spectral = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return ev(0) >= -tol.eps * spectral;
}

}  // namespace surfrig
