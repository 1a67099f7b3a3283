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

#include "fpclass/cardinal.hpp"

#include <cctype>

#include "fpclass/error.hpp"
#include "text_util.hpp"

namespace fpc {

ExtendedCardinal ExtendedCardinal::parse(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (t == "aleph0") return aleph0();
  if (t.empty() || t.size() > 18) throw ParseError("malformed cardinal '" + std::string(t) + "'");
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed cardinal '" + std::string(t) + "' (expected digits or aleph0)");
    }
  }
  return ExtendedCardinal(std::stoull(std::string(t)));
}

std::uint64_t ExtendedCardinal::value() const {
  if (infinite_) throw UsageError("value() of aleph0");
  return value_;
}

std::string ExtendedCardinal::to_string() const {
  return infinite_ ? std::string("aleph0") : std::to_string(value_);
}

}  // namespace fpc
