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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "fpclass/error.hpp"
#include "fpclass/io.hpp"

namespace fpc::cli {

namespace {

FinitePotentOperator load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_operator(text.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy classification of finite potent endomorphisms", "fpclass"};
  app.require_subcommand(1);

  std::string path_a;
  std::string path_b;
  bool with_jordan = false;
  bool emit_tau = false;
  std::size_t order = 0;
  std::size_t bound = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "Decompose an operator and print its invariants");
  analyze->add_option("file", path_a, "Operator document")->required();
  analyze->add_flag("--jordan", with_jordan, "Append a Jordan basis");

  CLI::App* sig = app.add_subcommand("signature", "Print the complete conjugacy invariant");
  sig->add_option("file", path_a, "Operator document")->required();

  CLI::App* jordan = app.add_subcommand("jordan", "Print a Jordan basis of the block");
  jordan->add_option("file", path_a, "Operator document")->required();

  CLI::App* conj = app.add_subcommand("conjugate-check", "Decide whether two operators are conjugate");
  conj->add_option("first", path_a, "Operator document")->required();
  conj->add_option("second", path_b, "Operator document")->required();
  conj->add_flag("--emit-tau", emit_tau, "Print a conjugating matrix when one exists");

  CLI::App* enumerate = app.add_subcommand("enumerate", "List nilpotent classes of a countable space");
  enumerate->add_option("--order", order, "Largest nilpotency order")->required();
  enumerate->add_option("--bound", bound, "Largest finite mu entry")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze) {
      out << analysis_report(load(path_a), with_jordan);
    } else if (*sig) {
      out << signature_report(load(path_a));
    } else if (*jordan) {
      out << jordan_report(load(path_a));
    } else if (*conj) {
      const FinitePotentOperator a = load(path_a);
      const FinitePotentOperator b = load(path_b);
      out << conjugacy_report(a, b, emit_tau);
    } else if (*enumerate) {
      out << enumeration_report(order, bound);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace fpc::cli
