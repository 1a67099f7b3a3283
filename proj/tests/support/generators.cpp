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

#include "generators.hpp"

#include <algorithm>

namespace fpc::testing {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FieldSpec random_field(Rng& rng) {
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  const std::size_t pick = uniform(rng, 0, 4);
  if (pick == 4) return FieldSpec::rationals();
  return FieldSpec::prime(primes[pick]);
}

Scalar random_scalar(const FieldSpec& field, Rng& rng) {
  if (field.is_prime_field()) {
    return Scalar::from_int(field, static_cast<long long>(uniform(rng, 0, field.modulus() - 1)));
  }
  const long long num = static_cast<long long>(uniform(rng, 0, 6)) - 3;
  const std::size_t den = uniform(rng, 0, 9) < 8 ? 1 : uniform(rng, 2, 3);
  mpq_class value(static_cast<long>(num));
  value /= static_cast<unsigned long>(den);
  return Scalar::from_rational(field, value);
}

Scalar random_nonzero_scalar(const FieldSpec& field, Rng& rng) {
  for (;;) {
    Scalar s = random_scalar(field, rng);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(field, rng);
  }
  return m;
}

Matrix random_invertible(const FieldSpec& field, std::size_t n, Rng& rng) {
  Matrix lower = Matrix::identity(field, n);
  Matrix upper(field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r > c) lower(r, c) = random_scalar(field, rng);
      if (r < c) upper(r, c) = random_scalar(field, rng);
    }
    upper(r, r) = random_nonzero_scalar(field, rng);
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(field, n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = Scalar::one(field);
  return p * lower * upper;
}

std::vector<std::size_t> random_partition(std::size_t n, Rng& rng) {
  std::vector<std::size_t> parts;
  std::size_t left = n;
  while (left > 0) {
    const std::size_t part = uniform(rng, 1, left);
    parts.push_back(part);
    left -= part;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

Matrix jordan_nilpotent(const FieldSpec& field, const std::vector<std::size_t>& lengths) {
  std::size_t n = 0;
  for (std::size_t len : lengths) n += len;
  Matrix m(field, n, n);
  std::size_t offset = 0;
  for (std::size_t len : lengths) {
    for (std::size_t i = 0; i + 1 < len; ++i) m(offset + i, offset + i + 1) = Scalar::one(field);
    offset += len;
  }
  return m;
}

namespace {

Matrix conjugate(const Matrix& m, Rng& rng) {
  const Matrix p = random_invertible(m.field(), m.rows(), rng);
  return p * m * *invert(p);
}

// Coefficients (b, c) of an irreducible x^2 + b x + c.
std::pair<Scalar, Scalar> irreducible_quadratic(const FieldSpec& field, Rng& rng) {
  if (field.is_rationals()) {
    static const long long options[][2] = {{0, 1}, {0, -2}, {1, 1}, {0, 3}};
    const auto& o = options[uniform(rng, 0, 3)];
    return {Scalar::from_int(field, o[0]), Scalar::from_int(field, o[1])};
  }
  const std::uint64_t p = field.modulus();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> found;
  for (std::uint64_t b = 0; b < p; ++b) {
    for (std::uint64_t c = 1; c < p; ++c) {
      bool root = false;
      for (std::uint64_t x = 0; x < p && !root; ++x) root = (x * x + b * x + c) % p == 0;
      if (!root) found.emplace_back(b, c);
    }
  }
  const auto [b, c] = found[uniform(rng, 0, found.size() - 1)];
  return {Scalar::from_int(field, static_cast<long long>(b)), Scalar::from_int(field, static_cast<long long>(c))};
}

}  // namespace

Matrix random_nilpotent(const FieldSpec& field, std::size_t n, Rng& rng) {
  if (uniform(rng, 0, 3) == 0) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r + 1; c < n; ++c) m(r, c) = random_scalar(field, rng);
    }
    return conjugate(m, rng);
  }
  return conjugate(jordan_nilpotent(field, random_partition(n, rng)), rng);
}

Matrix random_core(const FieldSpec& field, std::size_t n, Rng& rng) {
  Matrix m(field, n, n);
  // A few eigenvalues so that repeats are common.
  std::vector<Scalar> eigen;
  for (int i = 0; i < 2; ++i) eigen.push_back(random_nonzero_scalar(field, rng));
  std::size_t offset = 0;
  while (offset < n) {
    const std::size_t left = n - offset;
    if (left >= 2 && uniform(rng, 0, 2) == 0) {
      // companion block of an irreducible quadratic, repeated s times with
      // identity coupling
      const auto [b, c] = irreducible_quadratic(field, rng);
      const std::size_t s = uniform(rng, 1, std::min<std::size_t>(2, left / 2));
      for (std::size_t k = 0; k < s; ++k) {
        const std::size_t o = offset + 2 * k;
        m(o + 1, o) = Scalar::one(field);
        m(o, o + 1) = -c;
        m(o + 1, o + 1) = -b;
        if (k + 1 < s) {
          m(o, o + 2) = Scalar::one(field);
          m(o + 1, o + 3) = Scalar::one(field);
        }
      }
      offset += 2 * s;
    } else {
      const Scalar lambda = eigen[uniform(rng, 0, eigen.size() - 1)];
      const std::size_t len = uniform(rng, 1, std::min<std::size_t>(3, left));
      for (std::size_t i = 0; i < len; ++i) {
        m(offset + i, offset + i) = lambda;
        if (i + 1 < len) m(offset + i, offset + i + 1) = Scalar::one(field);
      }
      offset += len;
    }
  }
  return conjugate(m, rng);
}

Tail random_tail(Rng& rng) {
  Tail tail;
  const std::size_t entries = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < entries; ++i) {
    const std::size_t length = uniform(rng, 1, 4);
    const ExtendedCardinal mult =
        uniform(rng, 0, 2) == 0 ? ExtendedCardinal::aleph0() : ExtendedCardinal(uniform(rng, 1, 3));
    tail[length] = mult;
  }
  return tail;
}

FinitePotentOperator random_operator(const FieldSpec& field, std::size_t max_block, Rng& rng) {
  const std::size_t n = uniform(rng, 0, max_block);
  Matrix block(field, n, n);
  if (uniform(rng, 0, 4) == 0) {
    block = random_matrix(field, n, n, rng);
  } else {
    const std::size_t nil = uniform(rng, 0, n);
    const Matrix parts = block_diagonal(field, {random_nilpotent(field, nil, rng), random_core(field, n - nil, rng)});
    block = conjugate(parts, rng);
  }
  return FinitePotentOperator(field, std::move(block), random_tail(rng));
}

InvariantPair random_invariant_pair(const FieldSpec& field, std::size_t n, Rng& rng) {
  const std::size_t k = uniform(rng, 0, n);
  Matrix t = random_matrix(field, n, n, rng);
  for (std::size_t r = k; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) t(r, c) = Scalar::zero(field);
  }
  const Matrix p = random_invertible(field, n, rng);
  std::vector<Vector> leading;
  for (std::size_t c = 0; c < k; ++c) leading.push_back(p.column(c));
  return InvariantPair{p * t * *invert(p), Subspace::span(field, n, leading)};
}

}  // namespace fpc::testing
