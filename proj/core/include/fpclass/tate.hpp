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

#include "fpclass/field.hpp"
#include "fpclass/matrix.hpp"
#include "fpclass/operator.hpp"
#include "fpclass/polynomial.hpp"
#include "fpclass/subspace.hpp"

namespace fpc {

/// Characteristic polynomial of the operator on its invertible core. Monic of
/// degree dim W; the constant 1 when the core is empty.
struct CoreCharPoly {
  Polynomial poly;
};

/// det(x*I - a) via reduction to Hessenberg form. Works over every field.
Polynomial characteristic_polynomial(const Matrix& a);

/// Trace of the core block. The nilpotent part and the tail add nothing.
Scalar tate_trace(const FinitePotentOperator& op);

/// det(I + core block); 1 for a nilpotent operator.
Scalar tate_det(const FinitePotentOperator& op);

/// Computed from the core block and again from the core invariants
/// (prod p^(sum s*nu_s)); throws InvariantViolation if the two disagree.
CoreCharPoly core_char_poly(const FinitePotentOperator& op);

/// Value of some map on an invariant subspace U, on V/U and on V.
struct SplitValues {
  Scalar on_subspace;
  Scalar on_quotient;
  Scalar total;
};

/// (tr A|U, tr A|V/U, tr A). Throws UsageError when U is not A-invariant.
SplitValues trace_additivity_check(const Matrix& a, const Subspace& u);

/// (det(1+A|U), det(1+A|V/U), det(1+A)). Throws UsageError when U is not
/// A-invariant.
SplitValues det_multiplicativity_check(const Matrix& a, const Subspace& u);

}  // namespace fpc
