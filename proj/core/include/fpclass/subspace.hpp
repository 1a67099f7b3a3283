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
#include <string>
#include <vector>

#include "fpclass/matrix.hpp"

namespace fpc {

/// A linear subspace of k^n, stored in reduced echelon form: the basis
/// vectors have strictly increasing pivot positions, each pivot entry is 1
/// and every other basis vector vanishes there. The representation is
/// canonical, so subspace equality is representation equality.
class Subspace {
 public:
  /// The zero subspace of k^ambient.
  Subspace(const FieldSpec& field, std::size_t ambient);

  static Subspace full(const FieldSpec& field, std::size_t ambient);
  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(const FieldSpec& field, std::size_t ambient,
                       const std::vector<Vector>& vectors);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// ambient x dim matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;

  /// Coordinates of v in the echelon basis. Precondition: contains(v).
  Vector coordinates(const Vector& v) const;

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally grown set of linearly independent vectors. Used wherever a
/// basis must be extended greedily in a fixed order.
class IncrementalBasis {
 public:
  IncrementalBasis(const FieldSpec& field, std::size_t ambient);

  /// Adds v if it is independent of the vectors added so far.
  bool add(const Vector& v);
  bool spans(const Vector& v) const;
  std::size_t size() const noexcept { return reduced_.size(); }

 private:
  Vector reduce(Vector v) const;

  FieldSpec field_;
  std::size_t ambient_;
  // Each reduced vector has a 1 at its pivot.
  std::vector<Vector> reduced_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& a);
/// Column space of a.
Subspace image(const Matrix& a);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace intersection(const Subspace& u, const Subspace& w);
Subspace image_under(const Matrix& a, const Subspace& u);
/// A complement S of `inner` inside `outer` (inner + S = outer, direct). The
/// outer basis vectors are scanned in order and kept whenever they are
/// independent of inner plus the vectors kept so far. Throws UsageError when
/// inner is not contained in outer.
Subspace supplement(const Subspace& inner, const Subspace& outer);
/// The vectors chosen by supplement(), before echelon normalisation.
std::vector<Vector> supplement_vectors(const Subspace& inner, const Subspace& outer);
/// A maps u into itself.
bool is_invariant(const Matrix& a, const Subspace& u);

}  // namespace fpc
