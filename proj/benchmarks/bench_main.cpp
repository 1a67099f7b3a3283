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

#include <benchmark/benchmark.h>

#include <random>

#include "fpclass/classification.hpp"
#include "fpclass/factor.hpp"
#include "fpclass/jordan.hpp"
#include "fpclass/tate.hpp"

namespace {

using namespace fpc;

// Jordan blocks of lengths 1..k at 0 and at 2, mixed by a fixed unipotent
// change of basis so the input is dense.
Matrix mixed_block(const FieldSpec& field, std::size_t n) {
  std::mt19937_64 rng(n);
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= n / 2) m(i, i) = Scalar::from_int(field, 2);
    if (i + 1 < n && (i % 3) != 2 && i + 1 != n / 2) m(i, i + 1) = Scalar::one(field);
  }
  Matrix lower = Matrix::identity(field, n);
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) lower(r, c) = Scalar::from_int(field, static_cast<long long>(rng() % 3) - 1);
  }
  return lower * m * *invert(lower);
}

void BM_SignatureRational(benchmark::State& state) {
  const FieldSpec q = FieldSpec::rationals();
  const FinitePotentOperator op(q, mixed_block(q, static_cast<std::size_t>(state.range(0))),
                                Tail{{1, ExtendedCardinal::aleph0()}});
  for (auto _ : state) benchmark::DoNotOptimize(signature(op));
}
BENCHMARK(BM_SignatureRational)->Arg(4)->Arg(8)->Arg(12);

void BM_SignaturePrime(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(101);
  const FinitePotentOperator op(f, mixed_block(f, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(signature(op));
}
BENCHMARK(BM_SignaturePrime)->Arg(4)->Arg(8)->Arg(16);

void BM_JordanBasis(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(7);
  const FinitePotentOperator op(f, mixed_block(f, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(jordan_basis(op));
}
BENCHMARK(BM_JordanBasis)->Arg(4)->Arg(8)->Arg(12);

void BM_CoreCharPoly(benchmark::State& state) {
  const FieldSpec q = FieldSpec::rationals();
  const FinitePotentOperator op(q, mixed_block(q, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(core_char_poly(op));
}
BENCHMARK(BM_CoreCharPoly)->Arg(4)->Arg(8);

void BM_FactorRational(benchmark::State& state) {
  // (x^4 - 10x^2 + 1)(x^2 + x + 1)(x - 3)
  const Polynomial p = Polynomial::parse(FieldSpec::rationals(), "x^4 - 10*x^2 + 1") *
                       Polynomial::parse(FieldSpec::rationals(), "x^2 + x + 1") *
                       Polynomial::parse(FieldSpec::rationals(), "x - 3");
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorRational);

void BM_FactorPrime(benchmark::State& state) {
  const FieldSpec f = FieldSpec::prime(65537);
  std::vector<Scalar> coeffs;
  for (long long i = 0; i < state.range(0); ++i) coeffs.push_back(Scalar::from_int(f, i * i + 7));
  coeffs.push_back(Scalar::one(f));
  const Polynomial p(f, coeffs);
  for (auto _ : state) benchmark::DoNotOptimize(factor(p));
}
BENCHMARK(BM_FactorPrime)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
