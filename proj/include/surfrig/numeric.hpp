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

#ifndef SURFRIG_NUMERIC_HPP
#define SURFRIG_NUMERIC_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "surfrig/error.hpp"

namespace surfrig {

// Exact backend scalar. GMP keeps values canonical (gcd 1, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool kIsExact = std::same_as<T, Rational>;

// Relative tolerance used by the float backend. Ignored by the exact backend.
struct Tolerance {
  double eps = 1e-9;
};

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

// Parses "p", "p/q" or "-p/q". Throws ParseError on anything else.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& x);

template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw InvalidArgument("ragged rows in matrix literal");
      }
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T& x) { return x == 0; });
  }

  double max_abs() const {
    double best = 0.0;
    for (const T& x : data_) best = std::max(best, std::abs(to_double(x)));
    return best;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// x * M for a row vector x.
template <Scalar T>
std::vector<T> left_multiply(std::span<const T> x, const Matrix<T>& m) {
  if (x.size() != m.rows()) throw InvalidArgument("row vector length mismatch");
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

// M * x for a column vector x.
template <Scalar T>
std::vector<T> right_multiply(const Matrix<T>& m, std::span<const T> x) {
  if (x.size() != m.cols()) throw InvalidArgument("column vector length mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

template <Scalar T>
double norm2(std::span<const T> x) {
  double s = 0.0;
  for (const T& v : x) s += to_double(v) * to_double(v);
  return std::sqrt(s);
}

template <Scalar T>
double frobenius_norm(const Matrix<T>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const T& v : m.row(i)) s += to_double(v) * to_double(v);
  return std::sqrt(s);
}

// Reduced row echelon form over Q. `pivots[i]` is the pivot column of row i.
struct RowEchelon {
  Matrix<Rational> reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon reduced_row_echelon(const Matrix<Rational>& m);

// Exact: fraction-free (Bareiss) elimination. Float: number of singular
// values above eps * max(rows, cols) * sigma_max.
std::size_t rank(const Matrix<Rational>& m, Tolerance tol = {});
std::size_t rank(const Matrix<double>& m, Tolerance tol = {});

// Basis of {x : M x = 0}. Exact vectors are scaled to primitive integer
// vectors; float vectors are orthonormal.
std::vector<std::vector<Rational>> nullspace_basis(const Matrix<Rational>& m,
                                                   Tolerance tol = {});
std::vector<std::vector<double>> nullspace_basis(const Matrix<double>& m,
                                                 Tolerance tol = {});

// Basis of {x : x M = 0}, same conventions as nullspace_basis.
std::vector<std::vector<Rational>> cokernel_basis(const Matrix<Rational>& m,
                                                  Tolerance tol = {});
std::vector<std::vector<double>> cokernel_basis(const Matrix<double>& m,
                                                Tolerance tol = {});

// Positive semi-definiteness. Exact: LDL^T with symmetric pivoting.
// Float: smallest eigenvalue >= -eps * |M|_2. Throws InvalidArgument when
// M is not square and symmetric.
bool is_psd(const Matrix<Rational>& m, Tolerance tol = {});
bool is_psd(const Matrix<double>& m, Tolerance tol = {});

Matrix<double> to_double(const Matrix<Rational>& m);

}  // namespace surfrig

#endif  // SURFRIG_NUMERIC_HPP
