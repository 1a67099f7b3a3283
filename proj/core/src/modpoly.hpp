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

// Polynomials over Z/p with machine-word residues, p < 2^62. Shared by the
// GF(p) factoriser and the modular stage of factoring over Q.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fpc::detail {

__extension__ using uint128 = unsigned __int128;

using ModPoly = std::vector<std::uint64_t>;  // lowest degree first, trimmed

class ModRing {
 public:
  explicit ModRing(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;

  static void trim(ModPoly& f);
  static int degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

  ModPoly add(const ModPoly& a, const ModPoly& b) const;
  ModPoly sub(const ModPoly& a, const ModPoly& b) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const;
  ModPoly scale(const ModPoly& a, std::uint64_t s) const;
  std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) const;
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divrem(a, b).second; }
  ModPoly monic(const ModPoly& a) const;
  ModPoly gcd(ModPoly a, ModPoly b) const;
  ModPoly derivative(const ModPoly& a) const;
  /// base^e mod m.
  ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m) const;

  /// Square-free decomposition of a monic polynomial: pairs (g, i) with
  /// f = prod g^i, g square-free and pairwise coprime.
  std::vector<std::pair<ModPoly, unsigned>> squarefree(const ModPoly& f) const;
  /// Distinct-degree factorisation of a monic square-free polynomial: pairs
  /// (g, d) where g is the product of all irreducible factors of degree d.
  std::vector<std::pair<ModPoly, unsigned>> distinct_degree(const ModPoly& f) const;
  /// Equal-degree splitting of a monic product of irreducibles of degree d.
  std::vector<ModPoly> equal_degree(const ModPoly& f, unsigned d, std::mt19937_64& rng) const;
  /// Complete factorisation of a monic polynomial into monic irreducibles with
  /// multiplicities, sorted by (degree, coefficients).
  std::vector<std::pair<ModPoly, unsigned>> factor(const ModPoly& f) const;
  /// Rabin's irreducibility test for a monic polynomial.
  bool is_irreducible(const ModPoly& f) const;

 private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);
/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

}  // namespace fpc::detail
