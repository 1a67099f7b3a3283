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

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: fpclass_acceptance [path-to-fpclass-binary]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "fpclass/classification.hpp"
#include "fpclass/io.hpp"
#include "fpclass/jordan.hpp"
#include "fpclass/tate.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace fpc;
using fpc::testing::Rng;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Failures are counted and the first few are described.
class Tally {
 public:
  void check(bool condition, const std::string& what) {
    ++checks_;
    if (condition) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  std::size_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

const ExtendedCardinal kAleph0 = ExtendedCardinal::aleph0();

FieldSpec field_for(std::size_t i) {
  static const std::uint64_t primes[] = {2, 3, 5, 7};
  return i % 5 == 4 ? FieldSpec::rationals() : FieldSpec::prime(primes[i % 5]);
}

// Operators shared by criteria 3 and 6.
std::vector<FinitePotentOperator>& random_operators() {
  static std::vector<FinitePotentOperator> ops = [] {
    Rng rng(3001);
    std::vector<FinitePotentOperator> out;
    for (std::size_t i = 0; i < 500; ++i) out.push_back(fpc::testing::random_operator(field_for(i), 6, rng));
    return out;
  }();
  return ops;
}

Outcome tail_only_operators() {
  const FieldSpec q = FieldSpec::rationals();
  const FinitePotentOperator f(q, Matrix(q, 0, 0), Tail{{1, kAleph0}, {2, ExtendedCardinal(1)}});
  const FinitePotentOperator g(q, Matrix(q, 0, 0), Tail{{1, ExtendedCardinal(2)}, {2, kAleph0}});
  const Signature sf = signature(f);
  const Signature sg = signature(g);
  Tally t;
  t.check(sf.nilpotent.mu == std::vector<ExtendedCardinal>{kAleph0, ExtendedCardinal(1)}, "mu(f)");
  t.check(sg.nilpotent.mu == std::vector<ExtendedCardinal>{ExtendedCardinal(2), kAleph0}, "mu(g)");
  t.check(!is_conjugate(f, g), "f and g reported conjugate");
  return t.outcome("mu(f) = " + mu_to_string(sf.nilpotent.mu) + ", mu(g) = " + mu_to_string(sg.nilpotent.mu) +
                   ", conjugate = " + (is_conjugate(f, g) ? "true" : "false"));
}

Outcome f2_completeness() {
  Tally t;
  std::string summary;
  for (unsigned n : {2u, 3u}) {
    const std::size_t group = fpc::testing::f2_group_order(n);
    t.check(group == (n == 2 ? 6u : 168u), "GL order");
    const std::vector<int> orbits = fpc::testing::f2_conjugacy_orbits(n);
    std::map<std::string, int> ids;
    std::vector<int> sig(orbits.size());
    for (std::size_t a = 0; a < orbits.size(); ++a) {
      const std::string s = signature(FinitePotentOperator(FieldSpec::prime(2), fpc::testing::bit_to_matrix(
                                                                                    static_cast<fpc::testing::BitMatrix>(a), n)))
                                 .to_string();
      sig[a] = ids.emplace(s, static_cast<int>(ids.size())).first->second;
    }
    std::size_t disagreements = 0;
    for (std::size_t a = 0; a < orbits.size(); ++a) {
      for (std::size_t b = 0; b < orbits.size(); ++b) {
        if ((sig[a] == sig[b]) != (orbits[a] == orbits[b])) ++disagreements;
      }
    }
    t.check(disagreements == 0, std::to_string(disagreements) + " disagreements for n = " + std::to_string(n));
    const int classes = *std::max_element(orbits.begin(), orbits.end()) + 1;
    summary += (summary.empty() ? "" : "; ") + std::to_string(n) + "x" + std::to_string(n) + ": " +
               std::to_string(orbits.size()) + " matrices, |GL| = " + std::to_string(group) + ", " +
               std::to_string(classes) + " classes, " + std::to_string(disagreements) + " disagreements";
  }
  return t.outcome(summary);
}

Outcome conjugation_invariance() {
  Rng rng(3002);
  Tally t;
  std::size_t conjugations = 0;
  std::size_t rational = 0;
  for (const FinitePotentOperator& op : random_operators()) {
    rational += op.field().is_rationals();
    const Signature sig = signature(op);
    const Scalar tr = tate_trace(op);
    const Scalar det = tate_det(op);
    const Polynomial c = core_char_poly(op).poly;
    for (int k = 0; k < 3; ++k) {
      const Matrix tau = fpc::testing::random_invertible(op.field(), op.block_size(), rng);
      const FinitePotentOperator moved = conjugate_block(op, tau);
      ++conjugations;
      t.check(signature(moved) == sig, "signature changed");
      t.check(tate_trace(moved) == tr, "trace changed");
      t.check(tate_det(moved) == det, "det changed");
      t.check(core_char_poly(moved).poly == c, "char poly changed");
    }
  }
  return t.outcome(std::to_string(random_operators().size()) + " operators (" + std::to_string(rational) +
                   " over Q), " + std::to_string(conjugations) + " conjugations");
}

Outcome nilpotent_jordan_validity() {
  Rng rng(3003);
  Tally t;
  for (std::size_t i = 0; i < 500; ++i) {
    const FieldSpec field = field_for(i);
    const std::size_t n = fpc::testing::uniform(rng, 1, 8);
    const Matrix nil = fpc::testing::random_nilpotent(field, n, rng);
    const NilpotentJordanBasis jb = nilpotent_jordan_basis(nil);
    std::vector<Vector> columns;
    std::vector<std::size_t> lengths;
    for (const JordanChain& c : jb.chains) {
      lengths.push_back(c.length);
      for (std::size_t k = c.length; k-- > 0;) columns.push_back(c.vectors[k]);
    }
    const Matrix p = Matrix::from_columns(field, n, columns);
    const auto inverse = invert(p);
    t.check(inverse.has_value(), "chain vectors are dependent");
    if (!inverse) continue;
    t.check(*inverse * nil * p == fpc::testing::jordan_nilpotent(field, lengths), "not in Jordan form");
    const NilpotentInvariants inv = nilpotent_invariants(nil);
    std::vector<ExtendedCardinal> counts(inv.order, ExtendedCardinal(0));
    for (std::size_t len : lengths) counts[len - 1] += ExtendedCardinal(1);
    t.check(counts == inv.mu, "chain counts differ from mu");
  }
  return t.outcome("500 nilpotent blocks of size 1..8");
}

Outcome conjugator_soundness() {
  Rng rng(3004);
  Tally t;
  std::size_t conjugate_pairs = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    const FinitePotentOperator a = fpc::testing::random_operator(field_for(i), 6, rng);
    const FinitePotentOperator b = conjugate_block(a, fpc::testing::random_invertible(a.field(), a.block_size(), rng));
    const auto conj = build_conjugator(a, b);
    t.check(conj.has_value() && conj->tau.has_value(), "no conjugator for a conjugate pair");
    if (conj && conj->tau) {
      t.check(conjugate_block(a, *conj->tau).block() == b.block(), "tau A tau^-1 != B");
      ++conjugate_pairs;
    }
  }
  std::size_t distinct_pairs = 0;
  std::size_t same_size = 0;
  for (std::size_t i = 0; distinct_pairs < 200; ++i) {
    const FieldSpec field = field_for(i);
    const FinitePotentOperator a = fpc::testing::random_operator(field, 6, rng);
    FinitePotentOperator b = fpc::testing::random_operator(field, 6, rng);
    if (i % 2 == 0 && a.block_size() > 0) {
      // near miss: same block size and tail, one entry changed
      Matrix m = a.block();
      m(0, 0) += Scalar::one(field);
      b = FinitePotentOperator(field, m, a.tail());
    }
    if (signature(a) == signature(b)) continue;
    ++distinct_pairs;
    same_size += a.block_size() == b.block_size();
    t.check(!build_conjugator(a, b).has_value(), "conjugator returned for differing signatures");
  }
  return t.outcome(std::to_string(conjugate_pairs) + " conjugate pairs verified, " + std::to_string(distinct_pairs) +
                   " non-conjugate pairs rejected (" + std::to_string(same_size) + " with equal block size)");
}

Outcome tate_properties() {
  Rng rng(3005);
  Tally t;
  for (std::size_t i = 0; i < 100; ++i) {
    const FieldSpec field = field_for(i);
    const FinitePotentOperator op(field, fpc::testing::random_nilpotent(field, fpc::testing::uniform(rng, 0, 6), rng),
                                  fpc::testing::random_tail(rng));
    t.check(tate_trace(op).is_zero(), "nilpotent trace");
    t.check(tate_det(op).is_one(), "nilpotent det");
  }
  for (std::size_t i = 0; i < 100; ++i) {
    const fpc::testing::InvariantPair pair =
        fpc::testing::random_invariant_pair(field_for(i), fpc::testing::uniform(rng, 1, 6), rng);
    const SplitValues tr = trace_additivity_check(pair.a, pair.u);
    t.check(tr.on_subspace + tr.on_quotient == tr.total, "trace additivity");
    const SplitValues det = det_multiplicativity_check(pair.a, pair.u);
    t.check(det.on_subspace * det.on_quotient == det.total, "det multiplicativity");
  }
  std::size_t identities = 0;
  for (const FinitePotentOperator& op : random_operators()) {
    const Polynomial c = core_char_poly(op).poly;
    const auto m = static_cast<std::size_t>(c.degree());
    if (m == 0) {
      t.check(tate_trace(op).is_zero(), "empty core with nonzero trace");
    } else {
      t.check(c.coeff(m - 1) == -tate_trace(op), "x^(m-1) coefficient != -trace");
    }
    ++identities;
  }
  return t.outcome("100 nilpotent operators, 100 invariant pairs, " + std::to_string(identities) +
                   " coefficient identities");
}

Outcome mu_equals_nu() {
  Rng rng(3007);
  Tally t;
  for (std::size_t i = 0; i < 100; ++i) {
    const FieldSpec field = field_for(i);
    const Matrix nil = fpc::testing::random_nilpotent(field, fpc::testing::uniform(rng, 1, 7), rng);
    const NilpotentInvariants inv = nilpotent_invariants(nil);
    const std::vector<std::size_t> nu = nu_sequence(nil, Polynomial::x(field));
    std::vector<ExtendedCardinal> as_cardinals(nu.begin(), nu.end());
    t.check(as_cardinals == inv.mu, "mu != nu");
  }
  return t.outcome("100 nilpotent matrices");
}

// Independent description of the valid tuples: nonzero last entry and at
// least one aleph0.
Outcome enumeration_structure() {
  const std::vector<ExtendedCardinal> values{ExtendedCardinal(0), ExtendedCardinal(1), ExtendedCardinal(2), kAleph0};
  std::set<std::string> brute;
  std::vector<std::vector<ExtendedCardinal>> frontier{{}};
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::vector<ExtendedCardinal>> next;
    for (const auto& prefix : frontier) {
      for (const ExtendedCardinal& v : values) {
        auto tuple = prefix;
        tuple.push_back(v);
        const bool has_aleph = std::find(tuple.begin(), tuple.end(), kAleph0) != tuple.end();
        if (!tuple.back().is_zero() && has_aleph) brute.insert(mu_to_string(tuple));
        next.push_back(std::move(tuple));
      }
    }
    frontier = std::move(next);
  }
  std::set<std::string> listed;
  const auto classes = enumerate_nilpotent_classes(3, 2);
  for (const auto& tuple : classes) listed.insert(mu_to_string(tuple));
  Tally t;
  t.check(listed == brute, "tuple sets differ");
  t.check(listed.size() == classes.size(), "duplicates in the enumeration");
  return t.outcome(std::to_string(classes.size()) + " tuples listed, " + std::to_string(brute.size()) +
                   " from the brute-force filter");
}

std::string run_binary(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  const int status = pclose(pipe);
  return out + "<status " + std::to_string(status) + ">";
}

Outcome round_trip_and_determinism(const std::string& binary) {
  Rng rng(3009);
  Tally t;
  std::vector<std::string> documents;
  for (std::size_t i = 0; i < 100; ++i) {
    const FinitePotentOperator op = fpc::testing::random_operator(field_for(i), 5, rng);
    const std::string text = print_operator(op);
    const FinitePotentOperator once = parse_operator(text);
    const FinitePotentOperator twice = parse_operator(print_operator(once));
    t.check(once == op && twice == once && print_operator(twice) == text, "round trip changed the document");
    documents.push_back(text);
  }

  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "fpclass_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < 10; ++i) {
    paths.push_back((dir / ("op" + std::to_string(i) + ".json")).string());
    std::ofstream(paths.back()) << documents[i];
  }
  std::vector<std::vector<std::string>> commands;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    commands.push_back({"analyze", paths[i], "--jordan"});
    commands.push_back({"signature", paths[i]});
    // documents i and i + 5 share a field
    commands.push_back({"conjugate-check", paths[i], paths[(i + 5) % paths.size()], "--emit-tau"});
  }
  commands.push_back({"enumerate", "--order", "3", "--bound", "2"});

  std::size_t runs = 0;
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    t.check(c1 == c2 && out1.str() == out2.str() && err1.str() == err2.str(), "in-process runs differ");
    runs += 2;
    if (!binary.empty()) {
      std::string command = binary;
      for (const std::string& a : args) command += " '" + a + "'";
      const std::string first = run_binary(command);
      const std::string second = run_binary(command);
      t.check(first == second, "binary runs differ");
      t.check(first == out1.str() + "<status " + std::to_string(c1 << 8) + ">", "binary differs from library");
      runs += 2;
    }
  }
  std::filesystem::remove_all(dir);
  return t.outcome("100 documents round-tripped, " + std::to_string(runs) + " CLI runs compared" +
                   (binary.empty() ? " (in-process only)" : ""));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "tail-only operators f, g: mu and non-conjugacy", 1.0, tail_only_operators},
      {2, "GF(2) 2x2 and 3x3: signature equality iff brute-force conjugacy", 300.0, f2_completeness},
      {3, "signature, trace, det, char poly invariant under conjugation", 60.0, conjugation_invariance},
      {4, "nilpotent Jordan bases valid, chain counts equal mu", 60.0, nilpotent_jordan_validity},
      {5, "build_conjugator soundness", 60.0, conjugator_soundness},
      {6, "trace and det properties, char poly coefficient identity", 60.0, tate_properties},
      {7, "mu equals nu on finite nilpotent matrices", 30.0, mu_equals_nu},
      {8, "countable nilpotent classes, order <= 3, bound 2", 1.0, enumeration_structure},
      {9, "document round trip and CLI determinism", 60.0, [&] { return round_trip_and_determinism(binary); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit_seconds) {
      outcome.ok = false;
      outcome.detail += "; over the time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, c.limit_seconds);
    std::cout << (outcome.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << ": " << outcome.detail << " ("
              << timing << ")" << std::endl;
    failed += !outcome.ok;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
