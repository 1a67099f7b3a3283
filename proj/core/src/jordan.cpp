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

#include "fpclass/jordan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fpclass/classification.hpp"
#include "fpclass/error.hpp"
#include "fpclass/factor.hpp"
#include "fpclass/subspace.hpp"

namespace fpc {

Matrix nilpotent_jordan_block(const FieldSpec& field, std::size_t length) {
  Matrix j(field, length, length);
  for (std::size_t i = 0; i + 1 < length; ++i) j(i, i + 1) = Scalar::one(field);
  return j;
}

Matrix companion_power_block(const Polynomial& p, std::size_t s) {
  if (p.degree() < 1 || !p.is_monic()) throw UsageError("companion_power_block: p must be monic of positive degree");
  const FieldSpec& field = p.field();
  const auto d = static_cast<std::size_t>(p.degree());
  const std::size_t n = d * s;
  // index of p^σ x^c in the basis
  auto idx = [&](std::size_t sigma, std::size_t c) { return (s - 1 - sigma) * d + c; };
  Matrix m(field, n, n);
  for (std::size_t sigma = 0; sigma < s; ++sigma) {
    for (std::size_t c = 0; c + 1 < d; ++c) m(idx(sigma, c + 1), idx(sigma, c)) = Scalar::one(field);
    // x^d = p - sum p_t x^t
    const std::size_t col = idx(sigma, d - 1);
    for (std::size_t t = 0; t < d; ++t) m(idx(sigma, t), col) = -p.coeff(t);
    if (sigma + 1 < s) m(idx(sigma + 1, 0), col) = Scalar::one(field);
  }
  return m;
}

namespace {

std::vector<TailChains> tail_chains(const Tail& tail) {
  std::vector<TailChains> out;
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(TailChains{it->first, it->second});
  return out;
}

void verify_similarity(const Matrix& a, const Matrix& change, const Matrix& expected, const char* what) {
  const auto inverse = invert(change);
  if (!inverse) throw InvariantViolation(std::string(what) + ": basis vectors are dependent");
  if (!(*inverse * a * change == expected)) {
    throw InvariantViolation(std::string(what) + ": change of basis does not produce the canonical form");
  }
}

Vector lift(const Matrix& basis, const Vector& coords) { return basis.apply(coords); }

}  // namespace

NilpotentJordanBasis nilpotent_jordan_basis(const Matrix& u_block, const Tail& tail) {
  if (!u_block.is_square() || !is_nilpotent(u_block)) {
    throw UsageError("nilpotent_jordan_basis: block is not nilpotent");
  }
  const FieldSpec& field = u_block.field();
  const std::size_t dim = u_block.rows();
  const std::size_t n = nilpotency_order(u_block);

  std::vector<Matrix> powers{Matrix::identity(field, dim)};
  std::vector<Subspace> kernels{Subspace(field, dim)};
  for (std::size_t i = 1; i <= n; ++i) {
    powers.push_back(powers.back() * u_block);
    kernels.push_back(kernel(powers.back()));
  }

  // generators[i] spans H_i
  std::vector<std::vector<Vector>> generators(n + 1);
  for (std::size_t i = n; i >= 1; --i) {
    std::vector<Vector> inner = kernels[i - 1].basis();
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (const Vector& h : generators[j]) inner.push_back(powers[j - i].apply(h));
    }
    generators[i] = supplement_vectors(Subspace::span(field, dim, inner), kernels[i]);
  }

  NilpotentJordanBasis out;
  std::vector<Vector> columns;
  std::vector<Matrix> blocks;
  for (std::size_t i = n; i >= 1; --i) {
    for (const Vector& g : generators[i]) {
      JordanChain chain{i, g, {}};
      for (std::size_t k = 0; k < i; ++k) chain.vectors.push_back(powers[k].apply(g));
      for (std::size_t k = i; k-- > 0;) columns.push_back(chain.vectors[k]);
      blocks.push_back(nilpotent_jordan_block(field, i));
      out.chains.push_back(std::move(chain));
    }
  }
  out.tail = tail_chains(tail);
  out.change_of_basis = Matrix::from_columns(field, dim, columns);
  out.canonical_form = block_diagonal(field, blocks);
  if (columns.size() != dim) {
    throw InvariantViolation("Jordan chains cover " + std::to_string(columns.size()) + " of " +
                             std::to_string(dim) + " dimensions");
  }
  verify_similarity(u_block, out.change_of_basis, out.canonical_form, "nilpotent Jordan basis");
  return out;
}

CoreJordanBasis core_jordan_basis(const Matrix& w_block) {
  if (!w_block.is_square()) throw UsageError("core_jordan_basis: block is not square");
  if (!invert(w_block)) throw UsageError("core_jordan_basis: block is singular");
  const FieldSpec& field = w_block.field();
  const std::size_t dim = w_block.rows();
  CoreJordanBasis out;
  if (dim == 0) {
    out.change_of_basis = Matrix(field, 0, 0);
    out.canonical_form = Matrix(field, 0, 0);
    return out;
  }

  Factorization fac = factor(minimal_polynomial(w_block));
  std::sort(fac.factors.begin(), fac.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });

  std::vector<Vector> columns;
  std::vector<Matrix> blocks;
  for (const auto& [p, exponent] : fac.factors) {
    const auto d = static_cast<std::size_t>(p.degree());
    const Matrix pa = evaluate_at_matrix(p, w_block);
    std::vector<Matrix> powers{Matrix::identity(field, dim)};
    std::vector<Subspace> kernels{Subspace(field, dim)};
    for (std::size_t s = 1; s <= exponent + 1; ++s) {
      powers.push_back(powers.back() * pa);
      kernels.push_back(kernel(powers.back()));
    }

    for (std::size_t s = exponent; s >= 1; --s) {
      const Subspace inner = subspace_sum(kernels[s - 1], image_under(pa, kernels[s + 1]));
      IncrementalBasis taken(field, dim);
      for (const Vector& v : inner.basis()) taken.add(v);
      for (const Vector& e : kernels[s].basis()) {
        if (!taken.add(e)) continue;
        std::vector<Vector> iterates{e};
        for (std::size_t c = 1; c < d; ++c) {
          iterates.push_back(w_block.apply(iterates.back()));
          if (!taken.add(iterates.back())) {
            throw InvariantViolation("A-iterates of a core generator are dependent modulo the filtration");
          }
        }
        CoreBlock block{p, s, e, {}};
        for (std::size_t sigma = s; sigma-- > 0;) {
          for (const Vector& v : iterates) block.vectors.push_back(powers[sigma].apply(v));
        }
        columns.insert(columns.end(), block.vectors.begin(), block.vectors.end());
        blocks.push_back(companion_power_block(p, s));
        out.blocks.push_back(std::move(block));
      }
    }
  }
  if (columns.size() != dim) {
    throw InvariantViolation("core blocks cover " + std::to_string(columns.size()) + " of " +
                             std::to_string(dim) + " dimensions");
  }
  out.change_of_basis = Matrix::from_columns(field, dim, columns);
  out.canonical_form = block_diagonal(field, blocks);
  verify_similarity(w_block, out.change_of_basis, out.canonical_form, "core basis");
  return out;
}

JordanBasis jordan_basis(const FinitePotentOperator& op) {
  const FieldSpec& field = op.field();
  const std::size_t b = op.block_size();
  const ASTDecomposition ast = ast_decompose(op);
  NilpotentJordanBasis nil = nilpotent_jordan_basis(ast.u_block, ast.tail);
  CoreJordanBasis core = core_jordan_basis(ast.w_block);
  const Matrix u_basis = Matrix::from_columns(field, b, ast.u_basis.basis());
  const Matrix w_basis = Matrix::from_columns(field, b, ast.w_basis.basis());

  JordanBasis out;
  out.tail = std::move(nil.tail);
  for (JordanChain& chain : nil.chains) {
    chain.generator = lift(u_basis, chain.generator);
    for (Vector& v : chain.vectors) v = lift(u_basis, v);
    out.nilpotent_chains.push_back(std::move(chain));
  }
  for (CoreBlock& block : core.blocks) {
    block.generator = lift(w_basis, block.generator);
    for (Vector& v : block.vectors) v = lift(w_basis, v);
    out.core_blocks.push_back(std::move(block));
  }
  std::vector<Vector> columns = (u_basis * nil.change_of_basis).columns();
  for (Vector& v : (w_basis * core.change_of_basis).columns()) columns.push_back(std::move(v));
  out.change_of_basis = Matrix::from_columns(field, b, columns);
  out.canonical_form = block_diagonal(field, {nil.canonical_form, core.canonical_form});
  verify_similarity(op.block(), out.change_of_basis, out.canonical_form, "Jordan basis");
  return out;
}

std::optional<Conjugator> build_conjugator(const FinitePotentOperator& a, const FinitePotentOperator& b) {
  if (!is_conjugate(a, b)) return std::nullopt;
  const JordanBasis ja = jordan_basis(a);
  const JordanBasis jb = jordan_basis(b);

  std::map<std::size_t, std::size_t> count_a;
  std::map<std::size_t, std::size_t> count_b;
  for (const JordanChain& c : ja.nilpotent_chains) ++count_a[c.length];
  for (const JordanChain& c : jb.nilpotent_chains) ++count_b[c.length];

  Conjugator out;
  if (count_a == count_b) {
    if (!(ja.canonical_form == jb.canonical_form)) {
      throw InvariantViolation("conjugate blocks have different canonical forms");
    }
    const auto inverse = invert(ja.change_of_basis);
    if (!inverse) throw InvariantViolation("Jordan change of basis is singular");
    Matrix tau = jb.change_of_basis * *inverse;
    if (!(conjugate_block(a, tau).block() == b.block())) {
      throw InvariantViolation("conjugator does not carry the first block onto the second");
    }
    out.tau = std::move(tau);
    return out;
  }

  std::set<std::size_t> lengths;
  for (const auto& entry : count_a) lengths.insert(entry.first);
  for (const auto& entry : count_b) lengths.insert(entry.first);
  for (std::size_t len : lengths) {
    const std::size_t na = count_a[len];
    const std::size_t nb = count_b[len];
    if (na > nb) {
      out.exchanges.push_back(TailExchange{len, na - nb, TailExchange::Direction::BlockToTail});
    } else if (nb > na) {
      out.exchanges.push_back(TailExchange{len, nb - na, TailExchange::Direction::TailToBlock});
    }
  }
  return out;
}

}  // namespace fpc
