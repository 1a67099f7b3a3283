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

#include "fpclass/operator.hpp"

namespace fpc {

/// Reads an operator document:
///
///     {
///       "field": "GF(5)",
///       "block": [["0", "1"], ["0", "0"]],
///       "tail": {"1": "aleph0", "2": "1"}
///     }
///
/// Scalars are strings. "tail" may be omitted. Throws ParseError naming the
/// offending location (line and column for syntax errors, a path such as
/// block[1][0] or tail["3"] otherwise).
FinitePotentOperator parse_operator(std::string_view text);

/// Canonical document text; parse_operator(print_operator(op)) == op.
std::string print_operator(const FinitePotentOperator& op);

/// Dimensions, signature, trace, det(1 + .) and core characteristic
/// polynomial; Jordan data is appended when include_jordan is set.
std::string analysis_report(const FinitePotentOperator& op, bool include_jordan);

std::string signature_report(const FinitePotentOperator& op);

std::string jordan_report(const FinitePotentOperator& op);

/// "CONJUGATE" or "NOT CONJUGATE" on the first line. With emit_tau, a
/// conjugate verdict is followed by the conjugating matrix, or by the chain
/// exchanges with the tail when no block-level matrix exists.
std::string conjugacy_report(const FinitePotentOperator& a, const FinitePotentOperator& b,
                             bool emit_tau);

/// One mu tuple per line.
std::string enumeration_report(std::size_t max_order, std::size_t finite_entry_bound);

}  // namespace fpc
