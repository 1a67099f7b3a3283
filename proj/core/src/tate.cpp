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

#include "fpclass/tate.hpp"

#include <utility>

#include "fpclass/classification.hpp"
#include "fpclass/error.hpp"

namespace fpc {

namespace {

Matrix identity_plus(const Matrix& a) { return Matrix::identity(a.field(), a.rows()) + a; }

// Matrices of A on U and on V/U, read off a basis adapted to U.
std::pair<Matrix, Matrix> split_at(const Matrix& a, const Subspace& u) {
  if (!a.is_square() || a.rows() != u.ambient_dim()) throw UsageError("invariant-subspace check: shape mismatch");
  if (!is_invariant(a, u)) throw UsageError("subspace is not invariant under the matrix");
  const FieldSpec& field = a.field();
  const std::size_t n = a.rows();
  const std::size_t k = u.dim();
  std::vector<Vector> columns = u.basis();
  for (Vector& v : supplement_vectors(u, Subspace::full(field, n))) columns.push_back(std::move(v));
  const Matrix change = Matrix::from_columns(field, n, columns);
  const auto inverse = invert(change);
  if (!inverse) throw InvariantViolation("adapted basis is singular");
  const Matrix t = *inverse * a * change;
  if (!t.submatrix(k, 0, n - k, k).is_zero()) {
    throw InvariantViolation("adapted basis does not block-triangularise the matrix");
  }
  return {t.submatrix(0, 0, k, k), t.submatrix(k, k, n - k, n - k)};
}

}  // namespace

Polynomial characteristic_polynomial(const Matrix& a) {
  if (!a.is_square()) throw UsageError("characteristic_polynomial of a non-square matrix");
  const FieldSpec& field = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;

  // Similarity transform to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && h(pivot, j).is_zero()) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, j + 1));
    }
    const Scalar inv = h(j + 1, j).inv();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      const Scalar u = h(i, j) * inv;
      for (std::size_t c = 0; c < n; ++c) h(i, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, i);
    }
  }

  // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (h_{i+1,i} ... h_{k,k-1}) p_i
  const Polynomial x = Polynomial::x(field);
  std::vector<Polynomial> p{Polynomial::constant(Scalar::one(field))};
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = (x - Polynomial::constant(h(k, k))) * p[k];
    Scalar product = Scalar::one(field);
    for (std::size_t i = k; i-- > 0;) {
      product *= h(i + 1, i);
      if (product.is_zero()) break;
      next = next - Polynomial::constant(h(i, k) * product) * p[i];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

Scalar tate_trace(const FinitePotentOperator& op) {
  const ASTDecomposition ast = ast_decompose(op);
  Scalar t = ast.w_block.trace();
  if (!(t == op.block().trace())) throw InvariantViolation("core trace differs from the block trace");
  return t;
}

Scalar tate_det(const FinitePotentOperator& op) {
  const ASTDecomposition ast = ast_decompose(op);
  Scalar d = determinant(identity_plus(ast.w_block));
  if (!(d == determinant(identity_plus(op.block())))) {
    throw InvariantViolation("det(1 + core) differs from det(1 + block)");
  }
  return d;
}

CoreCharPoly core_char_poly(const FinitePotentOperator& op) {
  const ASTDecomposition ast = ast_decompose(op);
  Polynomial direct = characteristic_polynomial(ast.w_block);

  Polynomial from_invariants = Polynomial::constant(Scalar::one(op.field()));
  for (const CoreEntry& e : core_invariants(ast.w_block).entries) {
    std::size_t exponent = 0;
    for (std::size_t s = 1; s <= e.nu.size(); ++s) exponent += s * e.nu[s - 1];
    from_invariants = from_invariants * poly_pow(e.factor, exponent);
  }
  if (!(direct == from_invariants)) {
    throw InvariantViolation("core characteristic polynomial " + direct.to_string() +
                             " disagrees with the invariants' product " + from_invariants.to_string());
  }
  return CoreCharPoly{std::move(direct)};
}

SplitValues trace_additivity_check(const Matrix& a, const Subspace& u) {
  const auto [on_u, on_quotient] = split_at(a, u);
  SplitValues out{on_u.trace(), on_quotient.trace(), a.trace()};
  if (!(out.on_subspace + out.on_quotient == out.total)) throw InvariantViolation("trace is not additive");
  return out;
}

SplitValues det_multiplicativity_check(const Matrix& a, const Subspace& u) {
  const auto [on_u, on_quotient] = split_at(a, u);
  SplitValues out{determinant(identity_plus(on_u)), determinant(identity_plus(on_quotient)),
                  determinant(identity_plus(a))};
  if (!(out.on_subspace * out.on_quotient == out.total)) {
    throw InvariantViolation("det(1 + .) is not multiplicative");
  }
  return out;
}

}  // namespace fpc
