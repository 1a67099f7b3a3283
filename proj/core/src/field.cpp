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

#include "fpclass/field.hpp"

#include <cctype>

#include "fpclass/error.hpp"
#include "text_util.hpp"

namespace fpc {

namespace {

__extension__ using uint128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

bool is_prime_trial_division(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > kMaxModulus) {
    throw UsageError("prime modulus " + std::to_string(p) +
                     " exceeds the supported maximum 2^32-1");
  }
  if (!is_prime_trial_division(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.kind_ = Kind::PrimeField;
  f.modulus_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (t == "Q") return rationals();
  if (t.size() > 4 && t.substr(0, 3) == "GF(" && t.back() == ')') {
    const std::string_view digits = detail::trim(t.substr(3, t.size() - 4));
    if (!all_digits(digits) || digits.size() > 12) {
      throw ParseError("malformed field modulus in '" + std::string(t) + "'");
    }
    return prime(std::stoull(std::string(digits)));
  }
  throw ParseError("unknown field '" + std::string(t) +
                   "' (expected \"Q\" or \"GF(p)\")");
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Scalar::Scalar(const FieldSpec& field, mpq_class value)
    : field_(field), value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(const FieldSpec& field, std::uint64_t residue)
    : field_(field), value_(residue % field.modulus()) {}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  if (field.is_rationals()) return Scalar(field, mpq_class(static_cast<long>(value)));
  const auto p = static_cast<long long>(field.modulus());
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar(field, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_integer(const FieldSpec& field, const mpz_class& value) {
  if (field.is_rationals()) return Scalar(field, mpq_class(value));
  return Scalar(field, reduce(value, field.modulus()));
}

Scalar Scalar::from_rational(const FieldSpec& field, const mpq_class& value) {
  if (field.is_rationals()) return Scalar(field, value);
  const Scalar num = from_integer(field, value.get_num());
  const Scalar den = from_integer(field, value.get_den());
  if (den.is_zero()) {
    throw ArithmeticError("denominator of " + value.get_str() +
                          " vanishes in " + field.to_string());
  }
  return num / den;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (field.is_prime_field()) {
    if (!is_integer_literal(t)) {
      throw ParseError("malformed scalar '" + std::string(t) + "' for " +
                       field.to_string() + " (expected a decimal integer)");
    }
    return from_integer(field, parse_integer(t));
  }
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(t)) {
      throw ParseError("malformed rational scalar '" + std::string(t) + "'");
    }
    return Scalar(field, mpq_class(parse_integer(t)));
  }
  const std::string_view num = detail::trim(t.substr(0, slash));
  const std::string_view den = detail::trim(t.substr(slash + 1));
  if (!is_integer_literal(num) || !all_digits(den)) {
    throw ParseError("malformed rational scalar '" + std::string(t) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) {
    throw ParseError("zero denominator in scalar '" + std::string(t) + "'");
  }
  return Scalar(field, mpq_class(parse_integer(num), d));
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw UsageError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw UsageError("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

void Scalar::check_same_field(const Scalar& rhs, const char* op) const {
  if (!(field_ == rhs.field_)) {
    throw UsageError(std::string("field mismatch in ") + op + ": " +
                     field_.to_string() + " vs " + rhs.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  return Scalar(field_, r == 0 ? 0 : field_.modulus() - r);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs, "add");
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs, "sub");
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + field_.modulus() - std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs, "mul");
  if (field_.is_rationals()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = mulmod(r, std::get<std::uint64_t>(rhs.value_), field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs, "div");
  return *this *= rhs.inv();
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ArithmeticError("division by zero in " + field_.to_string());
  if (field_.is_rationals()) {
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
  }
  const std::uint64_t p = field_.modulus();
  return Scalar(field_, powmod(std::get<std::uint64_t>(value_), p - 2, p));
}

Scalar Scalar::normalized() const {
  if (field_.is_rationals()) return Scalar(field_, std::get<mpq_class>(value_));
  return Scalar(field_, std::get<std::uint64_t>(value_));
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::strong_ordering canonical_compare(const Scalar& lhs, const Scalar& rhs) {
  lhs.check_same_field(rhs, "compare");
  if (lhs.field_.is_rationals()) {
    const int c = cmp(std::get<mpq_class>(lhs.value_), std::get<mpq_class>(rhs.value_));
    return c <=> 0;
  }
  return std::get<std::uint64_t>(lhs.value_) <=> std::get<std::uint64_t>(rhs.value_);
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar div(const Scalar& a, const Scalar& b) { return a / b; }

}  // namespace fpc
