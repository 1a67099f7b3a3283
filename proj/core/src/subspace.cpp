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

#include "fpclass/subspace.hpp"

#include <algorithm>

#include "fpclass/error.hpp"

namespace fpc {

namespace {

void check_ambient(const Subspace& u, const Subspace& w, const char* op) {
  if (u.ambient_dim() != w.ambient_dim()) {
    throw UsageError(std::string("ambient dimension mismatch in ") + op + ": " +
                     std::to_string(u.ambient_dim()) + " vs " + std::to_string(w.ambient_dim()));
  }
  if (!(u.field() == w.field())) throw UsageError(std::string("field mismatch in ") + op);
}

}  // namespace

Subspace::Subspace(const FieldSpec& field, std::size_t ambient)
    : field_(field), ambient_(ambient) {}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(field, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient,
                        const std::vector<Vector>& vectors) {
  Subspace s(field, ambient);
  if (vectors.empty()) return s;
  for (const Vector& v : vectors) {
    if (v.size() != ambient) throw UsageError("vector length does not match ambient dimension");
  }
  Matrix rows(field, vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c) rows(r, c) = vectors[r][c];
  RowEchelon e = row_echelon(std::move(rows));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    s.basis_.push_back(e.reduced.row(i));
    s.pivots_.push_back(e.pivots[i]);
  }
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw UsageError("vector length does not match ambient dimension");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (!basis_[i][k].is_zero()) r[k] -= c * basis_[i][k];
    }
  }
  return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& other) const {
  check_ambient(*this, other, "containment test");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(field_, ambient_, basis_); }

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw UsageError("coordinates of a vector outside the subspace");
  // Reduced echelon form: the coordinate on basis vector i is the entry at its pivot.
  Vector coords;
  coords.reserve(basis_.size());
  for (std::size_t p : pivots_) coords.push_back(v[p]);
  return coords;
}

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += vector_to_string(basis_[i]);
  }
  return out + "}";
}

IncrementalBasis::IncrementalBasis(const FieldSpec& field, std::size_t ambient)
    : field_(field), ambient_(ambient) {}

Vector IncrementalBasis::reduce(Vector v) const {
  if (v.size() != ambient_) throw UsageError("vector length does not match ambient dimension");
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (!reduced_[i][k].is_zero()) v[k] -= c * reduced_[i][k];
    }
  }
  return v;
}

bool IncrementalBasis::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < ambient_ && r[pivot].is_zero()) ++pivot;
  if (pivot == ambient_) return false;
  const Scalar scale = r[pivot].inv();
  for (Scalar& s : r) s *= scale;
  // Keep earlier vectors clear of the new pivot so reduction stays one pass.
  for (Vector& w : reduced_) {
    const Scalar c = w[pivot];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      if (!r[k].is_zero()) w[k] -= c * r[k];
    }
  }
  reduced_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool IncrementalBasis::spans(const Vector& v) const { return is_zero_vector(reduce(v)); }

Subspace kernel(const Matrix& a) {
  const FieldSpec& field = a.field();
  RowEchelon e = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(field, a.cols(), free);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(field, a.cols(), vectors);
}

Subspace image(const Matrix& a) { return Subspace::span(a.field(), a.rows(), a.columns()); }

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  check_ambient(u, w, "subspace_sum");
  std::vector<Vector> vectors = u.basis();
  vectors.insert(vectors.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.field(), u.ambient_dim(), vectors);
}

Subspace intersection(const Subspace& u, const Subspace& w) {
  check_ambient(u, w, "intersection");
  // Solve U x = W y through the kernel of [U | -W].
  const std::size_t n = u.ambient_dim();
  Matrix m(u.field(), n, u.dim() + w.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = u.basis()[i][r];
  for (std::size_t j = 0; j < w.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, u.dim() + j) = -w.basis()[j][r];
  std::vector<Vector> vectors;
  for (const Vector& sol : kernel(m).basis()) {
    Vector v = zero_vector(u.field(), n);
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (sol[i].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += sol[i] * u.basis()[i][r];
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(u.field(), n, vectors);
}

Subspace image_under(const Matrix& a, const Subspace& u) {
  if (a.cols() != u.ambient_dim()) {
    throw UsageError("image_under: matrix has " + std::to_string(a.cols()) +
                     " columns but the subspace lives in dimension " +
                     std::to_string(u.ambient_dim()));
  }
  std::vector<Vector> vectors;
  vectors.reserve(u.dim());
  for (const Vector& v : u.basis()) vectors.push_back(a.apply(v));
  return Subspace::span(a.field(), a.rows(), vectors);
}

std::vector<Vector> supplement_vectors(const Subspace& inner, const Subspace& outer) {
  check_ambient(inner, outer, "supplement");
  if (!outer.contains(inner)) throw UsageError("supplement: inner subspace is not contained in outer");
  IncrementalBasis basis(inner.field(), inner.ambient_dim());
  for (const Vector& v : inner.basis()) basis.add(v);
  std::vector<Vector> chosen;
  for (const Vector& v : outer.basis()) {
    if (basis.add(v)) chosen.push_back(v);
  }
  return chosen;
}

Subspace supplement(const Subspace& inner, const Subspace& outer) {
  return Subspace::span(inner.field(), inner.ambient_dim(), supplement_vectors(inner, outer));
}

bool is_invariant(const Matrix& a, const Subspace& u) {
  if (!a.is_square() || a.cols() != u.ambient_dim()) throw UsageError("is_invariant: shape mismatch");
  return std::all_of(u.basis().begin(), u.basis().end(),
                     [&](const Vector& v) { return u.contains(a.apply(v)); });
}

}  // namespace fpc
