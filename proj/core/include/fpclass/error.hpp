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

#include <stdexcept>
#include <string>

namespace fpc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (shape or field mismatch,
/// unsupported input, containment failure, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and friends.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Valid input never triggers this.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. The message names the offending location.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fpc
