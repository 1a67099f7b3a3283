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

#include "fpclass/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "fpclass/classification.hpp"
#include "fpclass/error.hpp"
#include "fpclass/jordan.hpp"
#include "fpclass/tate.hpp"

namespace fpc {

namespace {

using json = nlohmann::json;

std::string type_name(const json& j) { return j.type_name(); }

FieldSpec parse_field(const json& doc) {
  if (!doc.contains("field")) throw ParseError("missing key \"field\"");
  const json& f = doc.at("field");
  if (!f.is_string()) throw ParseError("field: expected a string, got " + type_name(f));
  try {
    return FieldSpec::parse(f.get<std::string>());
  } catch (const Error& e) {
    throw ParseError("field: " + std::string(e.what()));
  }
}

Matrix parse_block(const json& doc, const FieldSpec& field) {
  if (!doc.contains("block")) throw ParseError("missing key \"block\"");
  const json& b = doc.at("block");
  if (!b.is_array()) throw ParseError("block: expected an array of rows, got " + type_name(b));
  const std::size_t n = b.size();
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = b[r];
    const std::string where = "block[" + std::to_string(r) + "]";
    if (!row.is_array()) throw ParseError(where + ": expected an array of scalars, got " + type_name(row));
    if (row.size() != n) {
      throw ParseError(where + ": row has " + std::to_string(row.size()) + " entries but the block has " +
                       std::to_string(n) + " rows (block must be square)");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::string at = where + "[" + std::to_string(c) + "]";
      const json& entry = row[c];
      if (!entry.is_string()) {
        throw ParseError(at + ": scalars must be written as strings, got " + type_name(entry));
      }
      try {
        m(r, c) = Scalar::parse(field, entry.get<std::string>());
      } catch (const Error& e) {
        throw ParseError(at + ": " + e.what());
      }
    }
  }
  return m;
}

bool canonical_decimal(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
  return s == "0" || s.front() != '0';
}

Tail parse_tail(const json& doc) {
  Tail tail;
  if (!doc.contains("tail")) return tail;
  const json& t = doc.at("tail");
  if (!t.is_object()) throw ParseError("tail: expected an object, got " + type_name(t));
  for (const auto& [key, value] : t.items()) {
    const std::string at = "tail[\"" + key + "\"]";
    if (!canonical_decimal(key)) throw ParseError(at + ": chain length must be a decimal integer");
    const std::size_t length = std::stoull(key);
    if (length == 0) throw ParseError(at + ": chain length must be positive");
    if (!value.is_string()) {
      throw ParseError(at + ": multiplicity must be a string (digits or aleph0), got " + type_name(value));
    }
    const std::string text = value.get<std::string>();
    if (text != "aleph0" && !canonical_decimal(text)) {
      throw ParseError(at + ": malformed multiplicity '" + text + "'");
    }
    const ExtendedCardinal mult = ExtendedCardinal::parse(text);
    if (mult.is_zero()) throw ParseError(at + ": multiplicity must be nonzero");
    tail.emplace(length, mult);
  }
  return tail;
}

std::string indent(const std::string& text, const std::string& prefix) {
  std::string out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out += prefix + line + "\n";
  return out;
}

std::string tail_to_string(const Tail& tail) {
  std::string out = "{";
  bool first = true;
  for (const auto& [length, mult] : tail) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(length) + ": " + mult.to_string();
  }
  return out + "}";
}

}  // namespace

FinitePotentOperator parse_operator(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (const auto close = msg.find("] "); msg.starts_with("[json.exception") && close != std::string::npos) {
      msg = msg.substr(close + 2);
    }
    throw ParseError(msg);
  }
  if (!doc.is_object()) throw ParseError("document must be an object, got " + type_name(doc));
  for (const auto& item : doc.items()) {
    if (item.key() != "field" && item.key() != "block" && item.key() != "tail") {
      throw ParseError("unknown key \"" + item.key() + "\"");
    }
  }
  const FieldSpec field = parse_field(doc);
  Matrix block = parse_block(doc, field);
  Tail tail = parse_tail(doc);
  return FinitePotentOperator(field, std::move(block), std::move(tail));
}

std::string print_operator(const FinitePotentOperator& op) {
  const Matrix& a = op.block();
  std::string out = "{\n  \"field\": \"" + op.field().to_string() + "\",\n";
  if (a.rows() == 0) {
    out += "  \"block\": [],\n";
  } else {
    out += "  \"block\": [\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
      out += "    [";
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (c) out += ", ";
        out += "\"" + a(r, c).to_string() + "\"";
      }
      out += r + 1 < a.rows() ? "],\n" : "]\n";
    }
    out += "  ],\n";
  }
  if (op.tail().empty()) {
    out += "  \"tail\": {}\n";
  } else {
    out += "  \"tail\": {\n";
    std::size_t i = 0;
    for (const auto& [length, mult] : op.tail()) {
      out += "    \"" + std::to_string(length) + "\": \"" + mult.to_string() + "\"";
      out += ++i < op.tail().size() ? ",\n" : "\n";
    }
    out += "  }\n";
  }
  return out + "}\n";
}

std::string signature_report(const FinitePotentOperator& op) { return signature(op).to_string(); }

std::string jordan_report(const FinitePotentOperator& op) {
  const JordanBasis jb = jordan_basis(op);
  std::string out;
  out += "change_of_basis: " + jb.change_of_basis.to_string() + "\n";
  out += "canonical_form: " + jb.canonical_form.to_string() + "\n";
  out += "nilpotent_chains:\n";
  for (const JordanChain& c : jb.nilpotent_chains) {
    out += "  length " + std::to_string(c.length) + ": generator " + vector_to_string(c.generator) + "\n";
  }
  out += "tail_chains:\n";
  for (const TailChains& t : jb.tail) {
    out += "  length " + std::to_string(t.length) + ": " + t.multiplicity.to_string() + "\n";
  }
  out += "core_blocks:\n";
  for (const CoreBlock& b : jb.core_blocks) {
    out += "  (" + b.factor.to_string() + ")^" + std::to_string(b.exponent) + ": generator " +
           vector_to_string(b.generator) + "\n";
  }
  return out;
}

std::string analysis_report(const FinitePotentOperator& op, bool include_jordan) {
  const ASTDecomposition ast = ast_decompose(op);
  std::string out;
  out += "field: " + op.field().to_string() + "\n";
  out += "dimension: " + dimension(op).to_string() + "\n";
  out += "block_size: " + std::to_string(op.block_size()) + "\n";
  out += "nilpotent_block_dim: " + std::to_string(ast.u_basis.dim()) + "\n";
  out += "core_dim: " + std::to_string(ast.w_basis.dim()) + "\n";
  out += "tail: " + tail_to_string(op.tail()) + "\n";
  out += "minimal_polynomial: " + ast.annihilator.to_string() + "\n";
  out += "signature:\n" + indent(signature(op).to_string(), "  ");
  out += "trace: " + tate_trace(op).to_string() + "\n";
  out += "det_1_plus: " + tate_det(op).to_string() + "\n";
  out += "core_char_poly: " + core_char_poly(op).poly.to_string() + "\n";
  if (include_jordan) out += "jordan:\n" + indent(jordan_report(op), "  ");
  return out;
}

std::string conjugacy_report(const FinitePotentOperator& a, const FinitePotentOperator& b, bool emit_tau) {
  if (!emit_tau) return is_conjugate(a, b) ? "CONJUGATE\n" : "NOT CONJUGATE\n";
  const std::optional<Conjugator> conj = build_conjugator(a, b);
  if (!conj) return "NOT CONJUGATE\n";
  std::string out = "CONJUGATE\n";
  if (conj->tau) return out + "tau: " + conj->tau->to_string() + "\n";
  out += "tau: none (the blocks differ by chains exchanged with the tail)\n";
  for (const TailExchange& e : conj->exchanges) {
    out += "  length " + std::to_string(e.length) + ": " + std::to_string(e.count) +
           (e.direction == TailExchange::Direction::BlockToTail ? " block -> tail" : " tail -> block") + "\n";
  }
  return out;
}

std::string enumeration_report(std::size_t max_order, std::size_t finite_entry_bound) {
  std::string out;
  for (const auto& mu : enumerate_nilpotent_classes(max_order, finite_entry_bound)) out += mu_to_string(mu) + "\n";
  return out;
}

}  // namespace fpc
