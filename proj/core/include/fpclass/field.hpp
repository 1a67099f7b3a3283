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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace fpc {

/// The ground field: either the rationals or a prime field GF(p).
///
/// Prime moduli are restricted to p < 2^32 so that primality can be certified
/// by trial division and products of residues fit in 64 bits.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

  FieldSpec() = default;

  static FieldSpec rationals() noexcept { return FieldSpec{}; }
  /// Throws UsageError unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "GF(p)".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint64_t modulus_ = 0;
};

/// Trial-division primality test.
bool is_prime_trial_division(std::uint64_t n) noexcept;

/// An element of a FieldSpec, always kept in canonical form: rationals fully
/// reduced with positive denominator, residues in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long long value);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& value);
  /// Rationals only, or any field when the denominator is invertible there.
  static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
  /// Textual forms "a/b" or "a" over Q; a decimal integer over GF(p).
  static Scalar parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Value as a rational. Precondition: field is Q.
  const mpq_class& rational() const;
  /// Residue in [0, p). Precondition: field is GF(p).
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Multiplicative inverse; throws ArithmeticError on zero.
  Scalar inv() const;

  /// Re-establishes canonical form. Idempotent.
  Scalar normalized() const;

  std::string to_string() const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  /// Total order used for canonical sorting: numeric order over Q, residue
  /// order over GF(p). Only meaningful within one field.
  friend std::strong_ordering canonical_compare(const Scalar& lhs,
                                                const Scalar& rhs);

 private:
  Scalar(const FieldSpec& field, mpq_class value);
  Scalar(const FieldSpec& field, std::uint64_t residue);

  void check_same_field(const Scalar& rhs, const char* op) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_{mpq_class{0}};
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar div(const Scalar& a, const Scalar& b);

}  // namespace fpc
