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

#include "fpclass/factor.hpp"

#include <algorithm>

#include "fpclass/error.hpp"
#include "modpoly.hpp"

namespace fpc {

namespace {

using detail::ModPoly;
using detail::ModRing;
using IntPoly = std::vector<mpz_class>;  // lowest degree first

ModPoly to_mod(const Polynomial& p) {
  ModPoly out;
  out.reserve(p.coeffs().size());
  for (const Scalar& c : p.coeffs()) out.push_back(c.residue());
  return out;
}

Polynomial from_mod(const FieldSpec& field, const ModPoly& f) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(f.size());
  for (std::uint64_t c : f) coeffs.push_back(Scalar::from_integer(field, mpz_class(static_cast<unsigned long>(c))));
  return Polynomial(field, std::move(coeffs));
}

Polynomial from_int_poly(const IntPoly& f) {
  const FieldSpec q = FieldSpec::rationals();
  std::vector<Scalar> coeffs;
  coeffs.reserve(f.size());
  for (const mpz_class& c : f) coeffs.push_back(Scalar::from_integer(q, c));
  return Polynomial(q, std::move(coeffs));
}

// Primitive integer polynomial with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f) {
  mpz_class content = 0;
  for (const mpz_class& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  IntPoly out = f;
  if (content == 0) return out;
  if (sgn(f.back()) < 0) content = -content;
  for (mpz_class& c : out) c /= content;
  return out;
}

IntPoly to_int_poly(const Polynomial& p) {
  mpz_class den = 1;
  for (const Scalar& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const Scalar& c : p.coeffs()) {
    const mpq_class scaled = c.rational() * den;
    out.push_back(scaled.get_num());
  }
  return primitive_part(out);
}

// Yun's square-free decomposition of a monic polynomial over Q.
std::vector<std::pair<Polynomial, unsigned>> squarefree_rational(const Polynomial& f) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (f.degree() <= 0) return out;
  const Polynomial df = f.derivative();
  const Polynomial a0 = poly_gcd(f, df);
  Polynomial b = poly_exact_div(f, a0);
  Polynomial c = poly_exact_div(df, a0);
  Polynomial d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const Polynomial a = poly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = poly_exact_div(b, a);
    c = poly_exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

bool divides_over_q(const IntPoly& divisor, const IntPoly& dividend, IntPoly& quotient) {
  auto [q, r] = poly_divrem(from_int_poly(dividend), from_int_poly(divisor));
  if (!r.is_zero()) return false;
  quotient.clear();
  for (const Scalar& c : q.coeffs()) {
    if (c.rational().get_den() != 1) return false;
    quotient.push_back(c.rational().get_num());
  }
  return true;
}

IntPoly symmetric_lift(const ModPoly& f, std::uint64_t p) {
  const mpz_class modulus(static_cast<unsigned long>(p));
  const mpz_class half(static_cast<unsigned long>(p / 2));
  IntPoly out;
  out.reserve(f.size());
  for (std::uint64_t c : f) {
    mpz_class v(static_cast<unsigned long>(c));
    if (v > half) v -= modulus;
    out.push_back(v);
  }
  return out;
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
  const mpz_class modulus(static_cast<unsigned long>(p));
  ModPoly out;
  out.reserve(f.size());
  for (const mpz_class& c : f) {
    mpz_class r = c % modulus;
    if (r < 0) r += modulus;
    out.push_back(r.get_ui());
  }
  ModRing::trim(out);
  return out;
}

// Irreducible factors of a primitive square-free integer polynomial of degree >= 2.
std::vector<IntPoly> factor_squarefree_integer(const IntPoly& g) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n > kMaxRationalFactorDegree) {
    throw UsageError("factorisation over Q supports square-free components up to degree " +
                     std::to_string(kMaxRationalFactorDegree) + "; got degree " + std::to_string(n));
  }
  mpz_class norm_sq = 0;
  for (const mpz_class& c : g) norm_sq += c * c;
  mpz_class norm = sqrt(norm_sq) + 1;
  mpz_class bound = norm << static_cast<unsigned>(n);
  const mpz_class target = 2 * abs(g.back()) * bound + 1;
  const mpz_class limit = mpz_class(1) << 62;
  if (target >= limit) {
    throw UsageError("coefficients too large for modular factorisation over Q (degree " +
                     std::to_string(n) + ")");
  }

  // Among a few admissible primes keep the one with the fewest modular factors.
  std::uint64_t best_prime = 0;
  std::vector<ModPoly> best_factors;
  std::uint64_t candidate = std::max<std::uint64_t>(target.get_ui(), 3);
  for (int admissible = 0, tries = 0; admissible < 3 && tries < 200; ++tries) {
    candidate = detail::next_prime(candidate);
    const std::uint64_t p = candidate;
    ++candidate;
    const ModRing ring(p);
    const ModPoly gp = reduce_mod(g, p);
    if (ModRing::degree(gp) != n) continue;
    const ModPoly monic = ring.monic(gp);
    if (ModRing::degree(ring.gcd(monic, ring.derivative(monic))) != 0) continue;
    ++admissible;
    std::vector<ModPoly> factors;
    for (auto& [h, mult] : ring.factor(monic)) factors.push_back(h);
    if (best_prime == 0 || factors.size() < best_factors.size()) {
      best_prime = p;
      best_factors = std::move(factors);
    }
  }
  if (best_prime == 0) throw InvariantViolation("no admissible prime found for modular factorisation");

  const ModRing ring(best_prime);
  std::vector<IntPoly> result;
  std::vector<ModPoly> remaining = std::move(best_factors);
  IntPoly rest = g;
  std::size_t k = 1;
  while (2 * k <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      // p exceeds |lc(rest)|, so the leading coefficient survives reduction.
      ModPoly prod = reduce_mod(IntPoly{rest.back()}, best_prime);
      for (std::size_t i : idx) prod = ring.mul(prod, remaining[i]);
      const IntPoly candidate_factor = primitive_part(symmetric_lift(prod, best_prime));
      IntPoly quotient;
      if (candidate_factor.size() > 1 && divides_over_q(candidate_factor, rest, quotient)) {
        result.push_back(candidate_factor);
        rest = primitive_part(quotient);
        std::vector<ModPoly> kept;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) kept.push_back(remaining[i]);
        }
        remaining = std::move(kept);
        found = true;
        break;
      }
      // Next k-combination of [0, remaining.size()).
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == remaining.size() - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++k;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

Polynomial monic_rational(const IntPoly& f) { return from_int_poly(f).monic(); }

void sort_factors(std::vector<std::pair<Polynomial, unsigned>>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
}

Factorization factor_prime_field(const Polynomial& p) {
  const FieldSpec& field = p.field();
  Factorization out{p.leading(), {}};
  const ModRing ring(field.modulus());
  for (const auto& [h, mult] : ring.factor(to_mod(p.monic()))) {
    if (!ring.is_irreducible(h)) throw InvariantViolation("GF(p) factor failed the irreducibility test");
    out.factors.emplace_back(from_mod(field, h), mult);
  }
  return out;
}

Factorization factor_rationals(const Polynomial& p) {
  Factorization out{p.leading(), {}};
  for (const auto& [g, mult] : squarefree_rational(p.monic())) {
    if (g.degree() == 1) {
      out.factors.emplace_back(g, mult);
      continue;
    }
    for (const IntPoly& h : factor_squarefree_integer(to_int_poly(g))) {
      out.factors.emplace_back(monic_rational(h), mult);
    }
  }
  return out;
}

}  // namespace

Polynomial Factorization::expand(const FieldSpec& field) const {
  Polynomial acc = Polynomial::constant(unit);
  if (!(unit.field() == field)) throw UsageError("factorisation field mismatch");
  for (const auto& [f, m] : factors) acc = acc * poly_pow(f, m);
  return acc;
}

std::string Factorization::to_string() const {
  std::string out = unit.to_string();
  for (const auto& [f, m] : factors) {
    out += " * (" + f.to_string() + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out;
}

Factorization factor(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("factor of the zero polynomial");
  Factorization out = p.field().is_rationals() ? factor_rationals(p) : factor_prime_field(p);
  sort_factors(out.factors);
  for (std::size_t i = 1; i < out.factors.size(); ++i) {
    if (out.factors[i - 1].first == out.factors[i].first) {
      throw InvariantViolation("repeated irreducible factor " + out.factors[i].first.to_string());
    }
  }
  if (!(out.expand(p.field()) == p)) {
    throw InvariantViolation("factorisation of " + p.to_string() + " does not multiply back");
  }
  return out;
}

bool is_irreducible(const Polynomial& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  if (p.field().is_prime_field()) {
    return ModRing(p.field().modulus()).is_irreducible(to_mod(p.monic()));
  }
  const Factorization f = factor(p);
  return f.factors.size() == 1 && f.factors.front().second == 1;
}

}  // namespace fpc
