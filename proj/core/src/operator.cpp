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

#include "fpclass/operator.hpp"

#include "fpclass/error.hpp"

namespace fpc {

FinitePotentOperator::FinitePotentOperator(const FieldSpec& field, Matrix block, Tail tail)
    : field_(field), block_(std::move(block)), tail_(std::move(tail)) {
  if (!block_.is_square()) {
    throw UsageError("operator block must be square, got " + std::to_string(block_.rows()) + "x" +
                     std::to_string(block_.cols()));
  }
  if (!(block_.field() == field_)) throw UsageError("operator block is over a different field");
  for (const auto& [length, mult] : tail_) {
    if (length == 0) throw UsageError("tail chain length must be positive");
    if (mult.is_zero()) {
      throw UsageError("tail multiplicity for length " + std::to_string(length) + " is zero");
    }
  }
}

FinitePotentOperator FinitePotentOperator::zero_space(const FieldSpec& field) {
  return FinitePotentOperator(field, Matrix(field, 0, 0));
}

namespace {

// Minimal polynomial of v relative to A: the monic generator of {p : p(A)v = 0}.
Polynomial krylov_minimal_polynomial(const Matrix& a, const Vector& v) {
  const FieldSpec& field = a.field();
  std::vector<Vector> krylov{v};
  IncrementalBasis basis(field, a.rows());
  basis.add(v);
  for (;;) {
    Vector next = a.apply(krylov.back());
    if (basis.spans(next)) {
      krylov.push_back(std::move(next));
      break;
    }
    basis.add(next);
    krylov.push_back(std::move(next));
  }
  // The kernel of [v, Av, ..., A^k v] is one-dimensional; scale so the
  // coefficient of A^k v is 1.
  const Subspace relations = kernel(Matrix::from_columns(field, a.rows(), krylov));
  if (relations.dim() != 1) throw InvariantViolation("Krylov relation space is not a line");
  Vector coeffs = relations.basis().front();
  const Scalar lead = coeffs.back();
  for (Scalar& c : coeffs) c /= lead;
  return Polynomial(field, std::move(coeffs));
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw UsageError("minimal_polynomial of a non-square matrix");
  const FieldSpec& field = a.field();
  Polynomial result = Polynomial::constant(Scalar::one(field));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Vector e = unit_vector(field, a.rows(), i);
    if (is_zero_vector(evaluate_at_matrix(result, a).apply(e))) continue;
    result = poly_lcm(result, krylov_minimal_polynomial(a, e));
  }
  if (!evaluate_at_matrix(result, a).is_zero()) {
    throw InvariantViolation("minimal polynomial does not annihilate the matrix");
  }
  return result;
}

Matrix restrict_to(const Matrix& a, const Subspace& u) {
  if (!a.is_square() || a.rows() != u.ambient_dim()) throw UsageError("restrict_to: shape mismatch");
  Matrix r(a.field(), u.dim(), u.dim());
  for (std::size_t j = 0; j < u.dim(); ++j) {
    const Vector image = a.apply(u.basis()[j]);
    if (!u.contains(image)) throw UsageError("restrict_to: subspace is not invariant");
    const Vector coords = u.coordinates(image);
    for (std::size_t i = 0; i < u.dim(); ++i) r(i, j) = coords[i];
  }
  return r;
}

ASTDecomposition ast_decompose(const FinitePotentOperator& op) {
  const Matrix& a = op.block();
  const FieldSpec& field = op.field();
  const std::size_t b = a.rows();

  Polynomial annihilator = minimal_polynomial(a);
  auto [m, q] = coprime_split_at_zero(annihilator);
  Subspace u = kernel(mat_pow(a, m));
  Subspace w = kernel(evaluate_at_matrix(q, a));

  if (u.dim() + w.dim() != b) {
    throw InvariantViolation("AST decomposition dimensions do not add up: " +
                             std::to_string(u.dim()) + " + " + std::to_string(w.dim()) +
                             " != " + std::to_string(b));
  }
  if (!is_invariant(a, u) || !is_invariant(a, w)) {
    throw InvariantViolation("AST decomposition summand is not invariant");
  }
  Matrix u_block = restrict_to(a, u);
  Matrix w_block = restrict_to(a, w);
  if (nilpotency_order(u_block) != m) {
    throw InvariantViolation("nilpotent part has order different from the x-multiplicity");
  }
  if (!invert(w_block)) throw InvariantViolation("core part is not invertible");
  if (!evaluate_at_matrix(q, w_block).is_zero()) {
    throw InvariantViolation("core part is not annihilated by the coprime factor");
  }

  std::vector<Vector> columns = u.basis();
  columns.insert(columns.end(), w.basis().begin(), w.basis().end());
  Matrix change = Matrix::from_columns(field, b, columns);
  const auto inverse = invert(change);
  if (!inverse) throw InvariantViolation("AST summands are not complementary");
  if (!(*inverse * a * change == block_diagonal(field, {u_block, w_block}))) {
    throw InvariantViolation("AST change of basis does not block-diagonalise the operator");
  }

  return ASTDecomposition{std::move(annihilator), m,
                          std::move(q),           std::move(u),
                          std::move(w),           std::move(u_block),
                          std::move(w_block),     std::move(change),
                          op.tail()};
}

Vector apply(const FinitePotentOperator& op, const Vector& v) { return op.block().apply(v); }

FinitePotentOperator conjugate_block(const FinitePotentOperator& op, const Matrix& tau) {
  if (!tau.is_square() || tau.rows() != op.block_size()) {
    throw UsageError("conjugate_block: tau must be " + std::to_string(op.block_size()) + "x" +
                     std::to_string(op.block_size()));
  }
  const auto inverse = invert(tau);
  if (!inverse) throw UsageError("conjugate_block: tau is singular");
  return FinitePotentOperator(op.field(), tau * op.block() * *inverse, op.tail());
}

ExtendedCardinal dimension(const FinitePotentOperator& op) {
  ExtendedCardinal total(op.block_size());
  for (const auto& [length, mult] : op.tail()) total += length * mult;
  return total;
}

}  // namespace fpc
