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
#include <map>

#include "fpclass/cardinal.hpp"
#include "fpclass/matrix.hpp"
#include "fpclass/polynomial.hpp"
#include "fpclass/subspace.hpp"

namespace fpc {

/// Multiplicities of infinite-family nilpotent Jordan chains, keyed by chain
/// length. Only nonzero multiplicities are stored.
using Tail = std::map<std::size_t, ExtendedCardinal>;

/// A finite potent endomorphism of a finite- or countable-dimensional space,
/// represented as a finite square block acting on the first b basis vectors
/// plus a tail of nilpotent Jordan chains. Every finite potent endomorphism of
/// such a space is conjugate to one of these.
class FinitePotentOperator {
 public:
  /// Throws UsageError for a non-square block, a field mismatch, a zero chain
  /// length or a zero multiplicity.
  FinitePotentOperator(const FieldSpec& field, Matrix block, Tail tail = {});

  /// The zero map on the zero space.
  static FinitePotentOperator zero_space(const FieldSpec& field);

  const FieldSpec& field() const noexcept { return field_; }
  const Matrix& block() const noexcept { return block_; }
  const Tail& tail() const noexcept { return tail_; }
  std::size_t block_size() const noexcept { return block_.rows(); }

  friend bool operator==(const FinitePotentOperator&, const FinitePotentOperator&) = default;

 private:
  FieldSpec field_;
  Matrix block_;
  Tail tail_;
};

/// The unique invariant splitting of the block span into the part where the
/// block is nilpotent and the part where it is invertible. The tail lies
/// entirely on the nilpotent side.
struct ASTDecomposition {
  Polynomial annihilator;         ///< minimal polynomial a(x) = x^m q(x) of the block
  std::size_t nilpotent_exponent; ///< m
  Polynomial coprime_part;        ///< q, with q(0) != 0
  Subspace u_basis;               ///< Ker A^m
  Subspace w_basis;               ///< Ker q(A)
  Matrix u_block;                 ///< A on u_basis, in its echelon basis
  Matrix w_block;                 ///< A on w_basis, in its echelon basis
  /// Columns: u_basis then w_basis. inverse * A * change_of_basis is
  /// block_diagonal(u_block, w_block).
  Matrix change_of_basis;
  Tail tail;
};

/// Monic minimal polynomial, computed as the lcm of the Krylov minimal
/// polynomials of the standard basis vectors. The 0x0 matrix gives 1.
Polynomial minimal_polynomial(const Matrix& a);

/// Matrix of A restricted to an invariant subspace, in the subspace's
/// echelon basis. Throws UsageError when U is not invariant.
Matrix restrict_to(const Matrix& a, const Subspace& u);

ASTDecomposition ast_decompose(const FinitePotentOperator& op);

/// Block action on a vector of the block span.
Vector apply(const FinitePotentOperator& op, const Vector& v);

/// Replaces the block by tau * A * tau^-1. The tail is unchanged.
FinitePotentOperator conjugate_block(const FinitePotentOperator& op, const Matrix& tau);

/// b + sum over the tail of length * multiplicity.
ExtendedCardinal dimension(const FinitePotentOperator& op);

}  // namespace fpc
