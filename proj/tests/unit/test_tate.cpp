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

#include "fpclass/classification.hpp"
#include "fpclass/error.hpp"
#include "fpclass/tate.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace fpc {
namespace {

const FieldSpec Q = FieldSpec::rationals();
const ExtendedCardinal kAleph0 = ExtendedCardinal::aleph0();

Scalar sq(long long v) { return Scalar::from_int(Q, v); }

Vector vq(std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(sq(x));
  return v;
}

TEST(Tate, TraceAndDet) {
  const FinitePotentOperator nil(Q, Matrix::from_ints(Q, {{0, 1}, {0, 0}}), Tail{{3, kAleph0}});
  EXPECT_EQ(tate_trace(nil), sq(0));
  EXPECT_EQ(tate_det(nil), sq(1));
  EXPECT_EQ(tate_trace(FinitePotentOperator(Q, Matrix::from_ints(Q, {{2}}), Tail{{1, kAleph0}})), sq(2));
  EXPECT_EQ(tate_det(FinitePotentOperator(Q, Matrix::from_ints(Q, {{2}}))), sq(3));
  const FinitePotentOperator mixed(Q, Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 0}, {0, 0, 5}}), Tail{{1, kAleph0}});
  EXPECT_EQ(tate_trace(mixed), sq(5));
  EXPECT_EQ(tate_det(FinitePotentOperator(Q, Matrix::from_ints(Q, {{2, 0}, {0, 3}}))), sq(12));
  EXPECT_EQ(tate_trace(FinitePotentOperator::zero_space(Q)), sq(0));
  EXPECT_EQ(tate_det(FinitePotentOperator::zero_space(Q)), sq(1));
}

TEST(Tate, CoreCharPoly) {
  EXPECT_EQ(core_char_poly(FinitePotentOperator(Q, Matrix(Q, 2, 2))).poly, Polynomial::parse(Q, "1"));
  EXPECT_EQ(core_char_poly(FinitePotentOperator(Q, Matrix::from_ints(Q, {{2}}))).poly, Polynomial::parse(Q, "x - 2"));
  EXPECT_EQ(core_char_poly(FinitePotentOperator(Q, Matrix::from_ints(Q, {{1, 1}, {0, 1}}))).poly,
            Polynomial::parse(Q, "x^2 - 2*x + 1"));
}

TEST(Tate, CharacteristicPolynomialAgainstCofactors) {
  testing::Rng rng(81);
  for (int trial = 0; trial < 150; ++trial) {
    const FieldSpec field = testing::random_field(rng);
    const std::size_t n = testing::uniform(rng, 0, 5);
    const Matrix a = trial % 2 ? testing::random_matrix(field, n, n, rng) : testing::random_core(field, n, rng);
    EXPECT_EQ(characteristic_polynomial(a), testing::cofactor_char_poly(a)) << a.to_string();
  }
}

TEST(Tate, SplitChecks) {
  const Matrix a = Matrix::from_ints(Q, {{1, 1}, {0, 2}});
  const Subspace e1 = Subspace::span(Q, 2, {vq({1, 0})});
  const SplitValues tr = trace_additivity_check(a, e1);
  EXPECT_EQ(tr.on_subspace, sq(1));
  EXPECT_EQ(tr.on_quotient, sq(2));
  EXPECT_EQ(tr.total, sq(3));
  const SplitValues det = det_multiplicativity_check(a, e1);
  EXPECT_EQ(det.on_subspace, sq(2));
  EXPECT_EQ(det.on_quotient, sq(3));
  EXPECT_EQ(det.total, sq(6));

  const SplitValues full = trace_additivity_check(a, Subspace::full(Q, 2));
  EXPECT_EQ(full.on_quotient, sq(0));
  EXPECT_EQ(full.total, sq(3));
  const SplitValues zero = trace_additivity_check(a, Subspace(Q, 2));
  EXPECT_EQ(zero.on_subspace, sq(0));
  EXPECT_EQ(zero.on_quotient, sq(3));
  const SplitValues dfull = det_multiplicativity_check(a, Subspace::full(Q, 2));
  EXPECT_EQ(dfull.on_quotient, sq(1));
  const SplitValues dzero = det_multiplicativity_check(Matrix(Q, 2, 2), e1);
  EXPECT_EQ(dzero.on_subspace, sq(1));
  EXPECT_EQ(dzero.on_quotient, sq(1));
  EXPECT_EQ(dzero.total, sq(1));

  EXPECT_THROW(trace_additivity_check(a, Subspace::span(Q, 2, {vq({0, 1})})), UsageError);
  EXPECT_THROW(det_multiplicativity_check(a, Subspace::span(Q, 2, {vq({0, 1})})), UsageError);
}

TEST(TateProperty, InvariantsDescendToTheQuotient) {
  testing::Rng rng(82);
  for (int trial = 0; trial < 150; ++trial) {
    const FieldSpec field = testing::random_field(rng);
    const FinitePotentOperator op = testing::random_operator(field, 6, rng);
    const Scalar tr = tate_trace(op);
    const Scalar det = tate_det(op);
    const Polynomial c = core_char_poly(op).poly;
    const ASTDecomposition ast = ast_decompose(op);
    const std::size_t m = ast.w_basis.dim();
    ASSERT_EQ(c.degree(), static_cast<long long>(m));
    EXPECT_TRUE(c.is_monic());
    if (m > 0) {
      EXPECT_EQ(c.coeff(m - 1), -tr);
    }
    Scalar constant = c.coeff(0);
    if (m % 2) constant = -constant;
    EXPECT_EQ(constant, determinant(ast.w_block));
    EXPECT_EQ(c, testing::cofactor_char_poly(ast.w_block));
    // ordinary trace on finite blocks
    EXPECT_EQ(tr, op.block().trace());

    const Matrix tau = testing::random_invertible(field, op.block_size(), rng);
    const FinitePotentOperator moved = conjugate_block(op, tau);
    EXPECT_EQ(tate_trace(moved), tr);
    EXPECT_EQ(tate_det(moved), det);
    EXPECT_EQ(core_char_poly(moved).poly, c);

    const testing::InvariantPair pair = testing::random_invariant_pair(field, testing::uniform(rng, 0, 5), rng);
    const SplitValues t = trace_additivity_check(pair.a, pair.u);
    EXPECT_EQ(t.on_subspace + t.on_quotient, t.total);
    const SplitValues d = det_multiplicativity_check(pair.a, pair.u);
    EXPECT_EQ(d.on_subspace * d.on_quotient, d.total);
  }
}

}  // namespace
}  // namespace fpc
