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
#include <utility>
#include <vector>

#include "fpclass/cardinal.hpp"
#include "fpclass/operator.hpp"
#include "fpclass/polynomial.hpp"

namespace fpc {

/// Conjugacy invariants of a nilpotent endomorphism: the order n and
/// mu_i = dim Ker f^i / (Ker f^(i-1) + f(Ker f^(i+1))) for 1 <= i <= n,
/// i.e. the number of Jordan chains of length i.
struct NilpotentInvariants {
  std::size_t order = 0;
  std::vector<ExtendedCardinal> mu;

  friend bool operator==(const NilpotentInvariants&, const NilpotentInvariants&) = default;
};

/// For one irreducible factor p of the core's minimal polynomial, nu[s-1] is
/// the number of summands k[x]/p^s, i.e. the k-dimension of
/// Ker p(A)^s / (Ker p(A)^(s-1) + p(A) Ker p(A)^(s+1)) divided by deg p.
struct CoreEntry {
  Polynomial factor;
  std::vector<std::size_t> nu;

  friend bool operator==(const CoreEntry&, const CoreEntry&) = default;
};

struct CoreInvariants {
  std::vector<CoreEntry> entries;  ///< sorted by canonical_less on the factor

  friend bool operator==(const CoreInvariants&, const CoreInvariants&) = default;
};

/// Complete conjugacy invariant of a finite potent endomorphism.
struct Signature {
  FieldSpec field;
  NilpotentInvariants nilpotent;
  CoreInvariants core;

  /// Canonical, byte-stable serialisation:
  ///
  ///     field: Q
  ///     order: 2
  ///     mu: [aleph0, 1]
  ///     core:
  ///       x - 2 : [1]
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.field == b.field && a.nilpotent == b.nilpotent && a.core == b.core;
  }
};

/// mu invariants of the nilpotent part: block contributions from the kernel
/// filtration plus the tail multiplicities. Throws UsageError when the block
/// is not nilpotent.
NilpotentInvariants nilpotent_invariants(const Matrix& u_block, const Tail& tail = {});

/// nu_1..nu_n for the irreducible p, where n is the exponent of p in the
/// minimal polynomial of A (empty when p does not divide it). Works for any
/// square A, including nilpotent A with p = x.
std::vector<std::size_t> nu_sequence(const Matrix& a, const Polynomial& p);

/// Throws UsageError when w_block is singular.
CoreInvariants core_invariants(const Matrix& w_block);

Signature signature(const FinitePotentOperator& op);

/// Equal dimension and equal signature. Throws UsageError on a field mismatch.
bool is_conjugate(const FinitePotentOperator& a, const FinitePotentOperator& b);

/// Membership in the set of mu-tuples realised by nilpotent endomorphisms of
/// a countably infinite-dimensional space: nonempty, last entry nonzero, and
/// at least one entry aleph0.
bool valid_countable_nilpotent_signature(const std::vector<ExtendedCardinal>& mu);

/// All valid tuples of length 1..max_order with entries in {0..bound, aleph0},
/// ordered by length, then lexicographically with every integer below aleph0.
std::vector<std::vector<ExtendedCardinal>> enumerate_nilpotent_classes(std::size_t max_order,
                                                                       std::size_t finite_entry_bound);

std::string mu_to_string(const std::vector<ExtendedCardinal>& mu);

}  // namespace fpc
