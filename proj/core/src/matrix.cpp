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

#include "fpclass/matrix.hpp"

#include <utility>

#include "fpclass/error.hpp"
#include "text_util.hpp"

namespace fpc {

Vector zero_vector(const FieldSpec& field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = Scalar::one(field);
  return v;
}

bool is_zero_vector(const Vector& v) {
  for (const Scalar& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string vector_to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field,
                         const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw UsageError("ragged rows in Matrix::from_rows");
    for (std::size_t c = 0; c < nc; ++c) {
      if (!(rows[r][c].field() == field)) throw UsageError("field mismatch in Matrix::from_rows");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows,
                            const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw UsageError("column length mismatch in Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Scalar>> scalars;
  scalars.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Scalar> converted;
    converted.reserve(row.size());
    for (long long v : row) converted.push_back(Scalar::from_int(field, v));
    scalars.push_back(std::move(converted));
  }
  return from_rows(field, scalars);
}

Matrix Matrix::parse(const FieldSpec& field, std::string_view text) {
  std::string_view t = detail::trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError("matrix must be enclosed in brackets: '" + std::string(t) + "'");
  }
  t = detail::trim(t.substr(1, t.size() - 2));
  if (t.empty()) return Matrix(field, 0, 0);
  std::vector<std::vector<Scalar>> rows;
  std::size_t r = 0;
  for (std::string_view row_text : detail::split(t, ';')) {
    std::vector<Scalar> row;
    std::size_t c = 0;
    for (std::string_view cell : detail::split(row_text, ',')) {
      try {
        row.push_back(Scalar::parse(field, cell));
      } catch (const ParseError& e) {
        throw ParseError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                         "): " + e.what());
      }
      ++c;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("matrix row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
    ++r;
  }
  return from_rows(field, rows);
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("submatrix out of range");
  Matrix m(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

bool Matrix::is_zero() const { return is_zero_vector(entries_); }

Scalar Matrix::trace() const {
  if (!is_square()) throw UsageError("trace of a non-square matrix");
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw UsageError("vector of length " + std::to_string(v.size()) + " applied to a " +
                     std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
  }
  return out + "]";
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("shape mismatch in matrix addition");
  if (!(a.field_ == b.field_)) throw UsageError("field mismatch in matrix addition");
  Matrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("shape mismatch in matrix subtraction");
  if (!(a.field_ == b.field_)) throw UsageError("field mismatch in matrix subtraction");
  Matrix m = a;
  for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] -= b.entries_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw UsageError("shape mismatch in matrix product: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  if (!(a.field_ == b.field_)) throw UsageError("field mismatch in matrix product");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) m(r, c) += x * y;
      }
    }
  }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (Scalar& e : m.entries_) e *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix mat_pow(const Matrix& a, std::size_t e) {
  if (!a.is_square()) throw UsageError("power of a non-square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Matrix block_diagonal(const FieldSpec& field, const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const Matrix& b : blocks) {
    if (!b.is_square()) throw UsageError("block_diagonal expects square blocks");
    n += b.rows();
  }
  Matrix m(field, n, n);
  std::size_t off = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return m;
}

RowEchelon row_echelon(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t found = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r) {
      if (!a(r, c).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == a.rows()) continue;
    if (found != pivot_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(found, k), a(pivot_row, k));
    }
    const Scalar scale = a(pivot_row, c).inv();
    for (std::size_t k = c; k < a.cols(); ++k) a(pivot_row, k) *= scale;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, c).is_zero()) continue;
      const Scalar factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        if (!a(pivot_row, k).is_zero()) a(r, k) -= factor * a(pivot_row, k);
      }
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return RowEchelon{std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_echelon(a).pivots.size(); }

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw UsageError("determinant of a non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!m(r, c).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == n) return Scalar::zero(m.field());
    if (found != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(found, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

std::optional<Matrix> invert(const Matrix& a) {
  if (!a.is_square()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Scalar::one(a.field());
  }
  RowEchelon e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.submatrix(0, n, n, n);
}

bool is_nilpotent(const Matrix& a) {
  if (!a.is_square()) throw UsageError("nilpotency test on a non-square matrix");
  return mat_pow(a, a.rows()).is_zero();
}

std::size_t nilpotency_order(const Matrix& a) {
  if (!is_nilpotent(a)) throw UsageError("matrix is not nilpotent");
  std::size_t order = 0;
  Matrix power = Matrix::identity(a.field(), a.rows());
  while (!power.is_zero()) {
    power = power * a;
    ++order;
  }
  return order;
}

}  // namespace fpc
