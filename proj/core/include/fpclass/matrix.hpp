/*
   Copyright 2026 The fpclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpclass/field.hpp"

namespace fpc {

/// Column vector of field elements.
using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t index);
bool is_zero_vector(const Vector& v);
/// "(a, b, c)".
std::string vector_to_string(const Vector& v);

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  /// 0x0 over Q.
  Matrix() : Matrix(FieldSpec::rationals(), 0, 0) {}
  /// Zero matrix of the given shape.
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix from_rows(const FieldSpec& field,
                          const std::vector<std::vector<Scalar>>& rows);
  /// Stacks the vectors as columns; every vector must have `rows` entries.
  static Matrix from_columns(const FieldSpec& field, std::size_t rows,
                             const std::vector<Vector>& columns);
  static Matrix from_ints(const FieldSpec& field,
                          const std::vector<std::vector<long long>>& rows);
  /// Textual form "[1, 0; 1/2, 1]"; "[]" is the 0x0 matrix.
  static Matrix parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  /// Rows [r0, r0+nr), columns [c0, c0+nc).
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  Scalar trace() const;

  /// A * v.
  Vector apply(const Vector& v) const;

  std::string to_string() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// pow(A, 0) is the identity.
Matrix mat_pow(const Matrix& a, std::size_t e);

/// Block-diagonal assembly of square matrices.
Matrix block_diagonal(const FieldSpec& field, const std::vector<Matrix>& blocks);

/// Reduced row-echelon form together with the pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(Matrix a);

std::size_t rank(const Matrix& a);
Scalar determinant(const Matrix& a);
/// Exact inverse, or nullopt when the matrix is singular.
std::optional<Matrix> invert(const Matrix& a);
/// Some power of a square matrix vanishes.
bool is_nilpotent(const Matrix& a);
/// Smallest n with A^n = 0 (0 for the 0x0 matrix). Precondition: nilpotent.
std::size_t nilpotency_order(const Matrix& a);

}  // namespace fpc
