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

#include "modpoly.hpp"

#include <algorithm>

#include "fpclass/error.hpp"

namespace fpc::detail {

std::uint64_t ModRing::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % p_;
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::uint64_t ModRing::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw ArithmeticError("inverse of zero modulo " + std::to_string(p_));
  return pow(a, p_ - 2);
}

void ModRing::trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly ModRing::add(const ModPoly& a, const ModPoly& b) const {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
  trim(out);
  return out;
}

ModPoly ModRing::sub(const ModPoly& a, const ModPoly& b) const {
  ModPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
  trim(out);
  return out;
}

ModPoly ModRing::mul(const ModPoly& a, const ModPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

ModPoly ModRing::scale(const ModPoly& a, std::uint64_t s) const {
  ModPoly out = a;
  for (auto& c : out) c = mul(c, s);
  trim(out);
  return out;
}

std::pair<ModPoly, ModPoly> ModRing::divrem(const ModPoly& a, const ModPoly& b) const {
  if (b.empty()) throw ArithmeticError("modular polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  ModPoly rem = a;
  ModPoly quot(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::uint64_t c = mul(rem[k + db], lead_inv);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = sub(rem[k + j], mul(c, b[j]));
  }
  rem.resize(db);
  trim(rem);
  trim(quot);
  return {quot, rem};
}

ModPoly ModRing::monic(const ModPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

ModPoly ModRing::gcd(ModPoly a, ModPoly b) const {
  while (!b.empty()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

ModPoly ModRing::derivative(const ModPoly& a) const {
  ModPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(i % p_, a[i]));
  trim(out);
  return out;
}

ModPoly ModRing::powmod(const ModPoly& base, const mpz_class& e, const ModPoly& m) const {
  ModPoly result = rem(ModPoly{1}, m);
  const ModPoly b = rem(base, m);
  if (e == 0) return result;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t k = bits; k-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), k)) result = rem(mul(result, b), m);
  }
  return result;
}

namespace {

// Inverse Frobenius on a polynomial whose exponents are all multiples of p.
ModPoly pth_root(const ModPoly& f, std::uint64_t p) {
  ModPoly out;
  for (std::size_t i = 0; i < f.size(); i += p) out.push_back(f[i]);
  ModRing::trim(out);
  return out;
}

bool is_one(const ModPoly& f) { return f.size() == 1 && f[0] == 1; }

bool poly_less(const ModPoly& a, const ModPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<std::pair<ModPoly, unsigned>> ModRing::squarefree(const ModPoly& f) const {
  std::vector<std::pair<ModPoly, unsigned>> result;
  if (degree(f) <= 0) return result;
  const ModPoly g = derivative(f);
  if (g.empty()) {
    for (auto& [h, j] : squarefree(pth_root(f, p_))) {
      result.emplace_back(h, static_cast<unsigned>(j * p_));
    }
    return result;
  }
  ModPoly c = gcd(f, g);
  ModPoly w = divrem(f, c).first;
  unsigned i = 1;
  while (!is_one(w)) {
    const ModPoly y = gcd(w, c);
    const ModPoly fac = divrem(w, y).first;
    if (degree(fac) > 0) result.emplace_back(fac, i);
    ++i;
    w = y;
    c = divrem(c, y).first;
  }
  if (!is_one(c)) {
    for (auto& [h, j] : squarefree(pth_root(c, p_))) {
      result.emplace_back(h, static_cast<unsigned>(j * p_));
    }
  }
  return result;
}

std::vector<std::pair<ModPoly, unsigned>> ModRing::distinct_degree(const ModPoly& f) const {
  std::vector<std::pair<ModPoly, unsigned>> result;
  ModPoly rest = f;
  const ModPoly x{0, 1};
  ModPoly h = rem(x, rest);
  const mpz_class p(static_cast<unsigned long>(p_));
  unsigned d = 1;
  while (degree(rest) >= 2 * static_cast<int>(d)) {
    h = powmod(h, p, rest);
    const ModPoly g = gcd(rest, sub(h, x));
    if (!is_one(g)) {
      result.emplace_back(g, d);
      rest = divrem(rest, g).first;
      h = rem(h, rest);
    }
    ++d;
  }
  if (degree(rest) > 0) result.emplace_back(rest, static_cast<unsigned>(degree(rest)));
  return result;
}

std::vector<ModPoly> ModRing::equal_degree(const ModPoly& f, unsigned d,
                                           std::mt19937_64& rng) const {
  const int n = degree(f);
  if (n == static_cast<int>(d)) return {f};
  std::uniform_int_distribution<std::uint64_t> coeff(0, p_ - 1);
  mpz_class exponent;
  if (p_ != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p_, d);
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    ModPoly a(static_cast<std::size_t>(n), 0);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    ModPoly g = gcd(a, f);
    if (degree(g) <= 0 || degree(g) == n) {
      ModPoly b;
      if (p_ == 2) {
        // Trace map a + a^2 + ... + a^(2^(d-1)).
        ModPoly power = rem(a, f);
        b = power;
        for (unsigned k = 1; k < d; ++k) {
          power = rem(mul(power, power), f);
          b = add(b, power);
        }
      } else {
        b = sub(powmod(a, exponent, f), ModPoly{1});
      }
      g = gcd(b, f);
    }
    if (degree(g) > 0 && degree(g) < n) {
      std::vector<ModPoly> out = equal_degree(g, d, rng);
      std::vector<ModPoly> more = equal_degree(divrem(f, g).first, d, rng);
      out.insert(out.end(), more.begin(), more.end());
      return out;
    }
  }
}

std::vector<std::pair<ModPoly, unsigned>> ModRing::factor(const ModPoly& f) const {
  std::vector<std::pair<ModPoly, unsigned>> result;
  if (degree(f) <= 0) return result;
  std::mt19937_64 rng(0x9E3779B97F4A7C15ULL ^ p_);
  for (const auto& [g, mult] : squarefree(f)) {
    for (const auto& [h, d] : distinct_degree(g)) {
      for (ModPoly& irreducible : equal_degree(h, d, rng)) {
        result.emplace_back(std::move(irreducible), mult);
      }
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return result;
}

bool ModRing::is_irreducible(const ModPoly& f) const {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const ModPoly x{0, 1};
  const mpz_class p(static_cast<unsigned long>(p_));
  // frob[k] = x^(p^k) mod f.
  std::vector<ModPoly> frob{rem(x, f)};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, f));
  if (frob[static_cast<std::size_t>(n)] != rem(x, f)) return false;
  int m = n;
  for (int q = 2; q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    const ModPoly g = gcd(sub(frob[static_cast<std::size_t>(n / q)], x), f);
    if (!is_one(g)) return false;
  }
  return true;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  const ModRing ring(n);
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = ring.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = ring.mul(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  if (n % 2 == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

}  // namespace fpc::detail
