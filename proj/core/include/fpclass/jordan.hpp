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
#include <vector>

#include "fpclass/cardinal.hpp"
#include "fpclass/matrix.hpp"
#include "fpclass/operator.hpp"
#include "fpclass/polynomial.hpp"

namespace fpc {

/// generator, f(generator), ..., f^(length-1)(generator).
struct JordanChain {
  std::size_t length = 0;
  Vector generator;
  std::vector<Vector> vectors;
};

/// `multiplicity` infinite-family chains of the given length. Never
/// materialised as vectors.
struct TailChains {
  std::size_t length = 0;
  ExtendedCardinal multiplicity;
};

/// One cyclic summand k[x]/p^s of the invertible core. `vectors` holds
/// p(A)^σ A^c e for σ = s-1 down to 0 and, inside each σ, c = 0..deg p - 1.
struct CoreBlock {
  Polynomial factor;
  std::size_t exponent = 0;
  Vector generator;
  std::vector<Vector> vectors;
};

/// Jordan basis of a nilpotent matrix, in that matrix's coordinates.
/// Chains are sorted by decreasing length, then by the echelon position of
/// their generator. The columns of change_of_basis list each chain as
/// f^(len-1)(g), ..., f(g), g, so canonical_form has ones on the
/// superdiagonal.
struct NilpotentJordanBasis {
  std::vector<JordanChain> chains;
  std::vector<TailChains> tail;
  Matrix change_of_basis;
  Matrix canonical_form;
};

/// Primary-decomposition basis of an invertible matrix, in its coordinates.
/// Blocks are ordered by factor (canonical_less), then by decreasing exponent.
struct CoreJordanBasis {
  std::vector<CoreBlock> blocks;
  Matrix change_of_basis;
  Matrix canonical_form;
};

/// Jordan-type basis of a whole operator in block coordinates.
/// change_of_basis^-1 * block * change_of_basis == canonical_form, with the
/// nilpotent chains first and the core blocks after.
struct JordanBasis {
  std::vector<JordanChain> nilpotent_chains;
  std::vector<TailChains> tail;
  std::vector<CoreBlock> core_blocks;
  Matrix change_of_basis;
  Matrix canonical_form;
};

/// len x len matrix with ones on the superdiagonal.
Matrix nilpotent_jordan_block(const FieldSpec& field, std::size_t length);

/// Matrix of x acting on k[x]/p^s in the basis p^σ x^c (σ = s-1..0,
/// c = 0..deg p - 1). For p = x - λ this is the upper Jordan block at λ.
Matrix companion_power_block(const Polynomial& p, std::size_t s);

/// Top-down supplement recursion: H_n complements Ker A^(n-1); for i < n,
/// H_i complements Ker A^(i-1) + sum_{j>i} A^(j-i) H_j inside Ker A^i. The
/// basis of every H_i generates the chains of length i. The result is
/// verified before it is returned. Throws UsageError on non-nilpotent input.
NilpotentJordanBasis nilpotent_jordan_basis(const Matrix& u_block, const Tail& tail = {});

/// Same recursion with A replaced by p(A) inside Ker p(A)^n for every
/// irreducible factor p. Generators are picked greedily from the echelon basis
/// of Ker p(A)^s, each one contributing its deg p iterates under A. Throws
/// UsageError on singular input.
CoreJordanBasis core_jordan_basis(const Matrix& w_block);

JordanBasis jordan_basis(const FinitePotentOperator& op);

/// Chains that must migrate between the finite block and the tail for a
/// conjugator to exist when both operators share a signature but their
/// blocks carry different chain counts.
struct TailExchange {
  enum class Direction { BlockToTail, TailToBlock };
  std::size_t length = 0;
  std::size_t count = 0;
  Direction direction = Direction::BlockToTail;
};

struct Conjugator {
  /// tau with tau * A_a * tau^-1 == A_b; present exactly when the two blocks
  /// carry the same Jordan data.
  std::optional<Matrix> tau;
  /// Nonempty exactly when tau is absent.
  std::vector<TailExchange> exchanges;
};

/// nullopt when the operators are not conjugate (different dimension or
/// signature). Throws UsageError on a field mismatch.
std::optional<Conjugator> build_conjugator(const FinitePotentOperator& a,
                                           const FinitePotentOperator& b);

}  // namespace fpc
