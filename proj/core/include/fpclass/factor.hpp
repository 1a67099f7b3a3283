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

#include "fpclass/polynomial.hpp"

namespace fpc {

/// unit * prod factor^multiplicity, factors monic, irreducible, pairwise
/// distinct and sorted with canonical_less.
struct Factorization {
  Scalar unit;
  std::vector<std::pair<Polynomial, unsigned>> factors;

  Polynomial expand(const FieldSpec& field) const;
  std::string to_string() const;
};

/// Largest square-free part degree accepted over Q.
inline constexpr int kMaxRationalFactorDegree = 16;

/// Complete factorisation into monic irreducibles.
///
/// Over GF(p): square-free, distinct-degree and equal-degree splitting with a
/// fixed pseudorandom seed. Over Q: square-free decomposition, then each
/// primitive integer component is factored modulo a single prime larger than
/// twice the leading coefficient times a Mignotte bound, and true factors are
/// recovered by recombining modular factors and trial division.
///
/// Throws UsageError on the zero polynomial, and over Q when a square-free
/// component exceeds kMaxRationalFactorDegree or the coefficient bound does
/// not fit a machine-word prime.
Factorization factor(const Polynomial& p);

/// Over GF(p) this is Rabin's test; over Q it factors the polynomial.
bool is_irreducible(const Polynomial& p);

}  // namespace fpc
