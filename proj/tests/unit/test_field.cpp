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

#include <gtest/gtest.h>

#include "fpclass/error.hpp"
#include "fpclass/field.hpp"
#include "generators.hpp"

namespace fpc {
namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

Scalar q(const char* text) { return Scalar::parse(Q, text); }

TEST(FieldSpec, ParsesAndPrints) {
  EXPECT_EQ(FieldSpec::parse("Q").to_string(), "Q");
  EXPECT_EQ(FieldSpec::parse(" GF(13) ").to_string(), "GF(13)");
  EXPECT_THROW(FieldSpec::parse("GF(12)"), UsageError);
  EXPECT_THROW(FieldSpec::parse("GF(1)"), UsageError);
  EXPECT_THROW(FieldSpec::parse("GF(x)"), ParseError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
  EXPECT_THROW(FieldSpec::prime(FieldSpec::kMaxModulus + 2), UsageError);
}

TEST(FieldSpec, TrialDivisionMatchesSieve) {
  std::vector<bool> composite(2000, false);
  for (std::size_t i = 2; i < composite.size(); ++i) {
    if (composite[i]) continue;
    for (std::size_t j = i * i; j < composite.size(); j += i) composite[j] = true;
  }
  for (std::uint64_t n = 0; n < composite.size(); ++n) {
    EXPECT_EQ(is_prime_trial_division(n), n >= 2 && !composite[n]) << n;
  }
}

TEST(Scalar, RationalArithmetic) {
  EXPECT_EQ(q("1/2") + q("1/3"), q("5/6"));
  EXPECT_EQ(q("2/3") * q("3/2"), Scalar::one(Q));
  EXPECT_EQ(q("7/3") + Scalar::zero(Q), q("7/3"));
  EXPECT_EQ(q("-4/6").to_string(), "-2/3");
  EXPECT_EQ(q("10/5").to_string(), "2");
  EXPECT_EQ(q("+3").to_string(), "3");
}

TEST(Scalar, PrimeFieldArithmetic) {
  EXPECT_EQ(Scalar::from_int(F7, 4) + Scalar::from_int(F7, 5), Scalar::from_int(F7, 2));
  EXPECT_EQ(Scalar::from_int(F7, 3).inv(), Scalar::from_int(F7, 5));
  EXPECT_EQ(Scalar::from_int(F7, -1).to_string(), "6");
  EXPECT_EQ(Scalar::parse(F7, "-9").to_string(), "5");
  EXPECT_EQ(Scalar::from_rational(F7, mpq_class(1, 2)), Scalar::from_int(F7, 4));
}

TEST(Scalar, Errors) {
  EXPECT_THROW(Scalar::zero(Q).inv(), ArithmeticError);
  EXPECT_THROW(Scalar::zero(F7).inv(), ArithmeticError);
  EXPECT_THROW(Scalar::one(Q) + Scalar::one(F7), UsageError);
  EXPECT_THROW(q("1/0"), ParseError);
  EXPECT_THROW(q("1.5"), ParseError);
  EXPECT_THROW(Scalar::parse(F7, "1/2"), ParseError);
  EXPECT_THROW(Scalar::from_rational(F7, mpq_class(1, 7)), ArithmeticError);
}

TEST(Scalar, CanonicalOrder) {
  EXPECT_EQ(canonical_compare(q("-1"), q("1/2")), std::strong_ordering::less);
  EXPECT_EQ(canonical_compare(Scalar::from_int(F7, 6), Scalar::from_int(F7, 2)), std::strong_ordering::greater);
}

TEST(ScalarProperty, FieldAxiomsOnRandomTriples) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const FieldSpec field = testing::random_field(rng);
    const Scalar a = testing::random_scalar(field, rng);
    const Scalar b = testing::random_scalar(field, rng);
    const Scalar c = testing::random_scalar(field, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Scalar::zero(field));
    EXPECT_EQ(a + (-a), Scalar::zero(field));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), Scalar::one(field));
      EXPECT_EQ(a / a, Scalar::one(field));
    }
    EXPECT_EQ(a.normalized(), a);
    EXPECT_EQ(a.normalized().normalized(), a.normalized());
    EXPECT_EQ(Scalar::parse(field, a.to_string()), a);
  }
}

}  // namespace
}  // namespace fpc
