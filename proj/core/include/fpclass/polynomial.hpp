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
#include <string_view>
#include <utility>
#include <vector>

#include "fpclass/field.hpp"
#include "fpclass/matrix.hpp"

namespace fpc {

/// Univariate polynomial over an exact field. Coefficients are stored lowest
/// degree first with trailing zeros stripped, so the zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
 public:
  explicit Polynomial(const FieldSpec& field);
  Polynomial(const FieldSpec& field, std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  static Polynomial x(const FieldSpec& field);
  static Polynomial monomial(const Scalar& c, std::size_t degree);
  /// Coefficients given lowest degree first as integers.
  static Polynomial from_ints(const FieldSpec& field, const std::vector<long long>& coeffs);
  /// Textual form such as "x^3 + 2*x - 1/2"; whitespace is ignored.
  static Polynomial parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Scalar coeff(std::size_t i) const;
  /// Precondition: nonzero.
  const Scalar& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar operator()(const Scalar& at) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Canonical descending-degree form, e.g. "x^2 - 2*x + 1/2"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// (quotient, remainder); throws ArithmeticError on a zero divisor.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
/// Monic lcm; lcm with zero is zero.
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& a, std::size_t e);
/// Exact quotient; throws InvariantViolation when b does not divide a.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);

/// Horner evaluation p(A).
Matrix evaluate_at_matrix(const Polynomial& p, const Matrix& a);

/// p = x^m * q with q(0) != 0.
std::pair<std::size_t, Polynomial> coprime_split_at_zero(const Polynomial& p);

/// Order by degree, then coefficients lowest degree first.
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace fpc
