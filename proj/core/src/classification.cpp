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

#include "fpclass/classification.hpp"

#include <algorithm>

#include "fpclass/error.hpp"
#include "fpclass/factor.hpp"
#include "fpclass/subspace.hpp"

namespace fpc {

namespace {

// dim Ker P^i - dim(Ker P^(i-1) + P Ker P^(i+1)) for i = 1..levels.
std::vector<std::size_t> filtration_quotient_dims(const Matrix& p, std::size_t levels) {
  const FieldSpec& field = p.field();
  std::vector<Subspace> kernels;
  kernels.reserve(levels + 2);
  kernels.emplace_back(field, p.rows());
  Matrix power = Matrix::identity(field, p.rows());
  for (std::size_t i = 1; i <= levels + 1; ++i) {
    power = power * p;
    kernels.push_back(kernel(power));
  }
  std::vector<std::size_t> dims;
  dims.reserve(levels);
  for (std::size_t i = 1; i <= levels; ++i) {
    const Subspace denominator = subspace_sum(kernels[i - 1], image_under(p, kernels[i + 1]));
    if (!kernels[i].contains(denominator)) {
      throw InvariantViolation("filtration quotient denominator escapes Ker P^i");
    }
    dims.push_back(kernels[i].dim() - denominator.dim());
  }
  return dims;
}

}  // namespace

NilpotentInvariants nilpotent_invariants(const Matrix& u_block, const Tail& tail) {
  if (!u_block.is_square() || !is_nilpotent(u_block)) {
    throw UsageError("nilpotent_invariants: block is not nilpotent");
  }
  const std::size_t block_order = nilpotency_order(u_block);
  const std::vector<std::size_t> block_mu = filtration_quotient_dims(u_block, block_order);
  std::size_t order = block_order;
  if (!tail.empty()) order = std::max(order, tail.rbegin()->first);

  NilpotentInvariants out;
  out.order = order;
  out.mu.assign(order, ExtendedCardinal(0));
  for (std::size_t i = 0; i < block_mu.size(); ++i) out.mu[i] += ExtendedCardinal(block_mu[i]);
  for (const auto& [length, mult] : tail) out.mu[length - 1] += mult;
  if (order > 0 && out.mu.back().is_zero()) {
    throw InvariantViolation("top mu invariant vanishes");
  }
  return out;
}

std::vector<std::size_t> nu_sequence(const Matrix& a, const Polynomial& p) {
  if (!a.is_square()) throw UsageError("nu_sequence: matrix is not square");
  if (p.degree() < 1) throw UsageError("nu_sequence: factor must have positive degree");
  const Matrix pa = evaluate_at_matrix(p.monic(), a);
  // Exponent of p in the minimal polynomial: where Ker p(A)^s stabilises.
  std::size_t exponent = 0;
  Matrix power = Matrix::identity(a.field(), a.rows());
  std::size_t previous = 0;
  for (;;) {
    power = power * pa;
    const std::size_t dim = kernel(power).dim();
    if (dim == previous) break;
    previous = dim;
    ++exponent;
  }
  const std::vector<std::size_t> dims = filtration_quotient_dims(pa, exponent);
  const auto d = static_cast<std::size_t>(p.degree());
  std::vector<std::size_t> nu;
  nu.reserve(dims.size());
  for (std::size_t dim_k : dims) {
    if (dim_k % d != 0) {
      throw InvariantViolation("k-dimension " + std::to_string(dim_k) +
                               " is not divisible by deg " + p.to_string());
    }
    nu.push_back(dim_k / d);
  }
  return nu;
}

CoreInvariants core_invariants(const Matrix& w_block) {
  if (!w_block.is_square()) throw UsageError("core_invariants: block is not square");
  if (!invert(w_block)) throw UsageError("core_invariants: block is singular");
  CoreInvariants out;
  if (w_block.rows() == 0) return out;
  const Factorization fac = factor(minimal_polynomial(w_block));
  std::size_t accounted = 0;
  for (const auto& [p, multiplicity] : fac.factors) {
    if (p.coeff(0).is_zero()) throw InvariantViolation("core minimal polynomial has the factor x");
    std::vector<std::size_t> nu = nu_sequence(w_block, p);
    if (nu.size() != multiplicity || nu.empty() || nu.back() == 0) {
      throw InvariantViolation("nu sequence for " + p.to_string() +
                               " disagrees with the minimal polynomial exponent");
    }
    for (std::size_t s = 1; s <= nu.size(); ++s) {
      accounted += static_cast<std::size_t>(p.degree()) * s * nu[s - 1];
    }
    out.entries.push_back(CoreEntry{p, std::move(nu)});
  }
  if (accounted != w_block.rows()) {
    throw InvariantViolation("core invariants account for " + std::to_string(accounted) +
                             " dimensions out of " + std::to_string(w_block.rows()));
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CoreEntry& x, const CoreEntry& y) { return canonical_less(x.factor, y.factor); });
  return out;
}

Signature signature(const FinitePotentOperator& op) {
  const ASTDecomposition ast = ast_decompose(op);
  return Signature{op.field(), nilpotent_invariants(ast.u_block, ast.tail),
                   core_invariants(ast.w_block)};
}

bool is_conjugate(const FinitePotentOperator& a, const FinitePotentOperator& b) {
  if (!(a.field() == b.field())) {
    throw UsageError("is_conjugate: operators over different fields (" + a.field().to_string() +
                     " vs " + b.field().to_string() + ")");
  }
  return dimension(a) == dimension(b) && signature(a) == signature(b);
}

std::string mu_to_string(const std::vector<ExtendedCardinal>& mu) {
  std::string out = "[";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ", ";
    out += mu[i].to_string();
  }
  return out + "]";
}

std::string Signature::to_string() const {
  std::string out;
  out += "field: " + field.to_string() + "\n";
  out += "order: " + std::to_string(nilpotent.order) + "\n";
  out += "mu: " + mu_to_string(nilpotent.mu) + "\n";
  out += "core:\n";
  for (const CoreEntry& e : core.entries) {
    out += "  " + e.factor.to_string() + " : [";
    for (std::size_t i = 0; i < e.nu.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(e.nu[i]);
    }
    out += "]\n";
  }
  return out;
}

bool valid_countable_nilpotent_signature(const std::vector<ExtendedCardinal>& mu) {
  if (mu.empty() || mu.back().is_zero()) return false;
  return std::any_of(mu.begin(), mu.end(), [](ExtendedCardinal c) { return c.is_aleph0(); });
}

std::vector<std::vector<ExtendedCardinal>> enumerate_nilpotent_classes(std::size_t max_order,
                                                                       std::size_t finite_entry_bound) {
  std::vector<ExtendedCardinal> values;
  for (std::size_t v = 0; v <= finite_entry_bound; ++v) values.emplace_back(v);
  values.push_back(ExtendedCardinal::aleph0());

  std::vector<std::vector<ExtendedCardinal>> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
      std::vector<ExtendedCardinal> tuple;
      tuple.reserve(n);
      for (std::size_t d : digits) tuple.push_back(values[d]);
      if (valid_countable_nilpotent_signature(tuple)) out.push_back(std::move(tuple));
      std::size_t pos = n;
      while (pos > 0 && digits[pos - 1] + 1 == values.size()) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
  return out;
}

}  // namespace fpc
