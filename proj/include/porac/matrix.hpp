// Copyright 2026 porac authors
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

#ifndef PORAC_MATRIX_HPP
#define PORAC_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace porac {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major. All operator algebra in this project runs
/// through this type; dimensions stay small (at most a few hundred), so the
/// kernels favour robustness and determinism over asymptotics.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries);

  /// Brace-friendly constructor for small literals, e.g. {{1,0},{0,-1}}.
  Matrix(std::initializer_list<std::initializer_list<cdouble>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cdouble& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<cdouble>& data() const { return data_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cdouble scale);

  Matrix adjoint() const;
  cdouble trace() const;
  double frobenius_norm() const;
  /// Largest |entry|.
  double max_abs() const;
  /// Largest |(*this - other)(i,j)|; dimensions must match.
  double max_abs_diff(const Matrix& other) const;
  /// Largest |H - H^dagger| entry; matrix must be square.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const;

  std::string to_string(int precision = 4) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cdouble scale, Matrix m);
Matrix operator*(Matrix m, cdouble scale);

/// Kronecker product. Entry ((i*b.rows+k),(j*b.cols+l)) = a(i,j)*b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// tr(a*b) without materialising the product. Inner dimensions must match and
/// the (virtual) product must be square.
cdouble trace_product(const Matrix& a, const Matrix& b);

}  // namespace porac

#endif  // PORAC_MATRIX_HPP
