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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fpc {

/// An element of {0, 1, 2, ...} ∪ {ℵ₀}. Addition absorbs at ℵ₀ and every
/// integer is smaller than ℵ₀.
class ExtendedCardinal {
 public:
  constexpr ExtendedCardinal() noexcept = default;
  constexpr ExtendedCardinal(std::uint64_t n) noexcept : value_(n) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedCardinal aleph0() noexcept {
    ExtendedCardinal c;
    c.infinite_ = true;
    return c;
  }
  /// Decimal integer or the token "aleph0".
  static ExtendedCardinal parse(std::string_view text);

  constexpr bool is_aleph0() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
  /// Throws UsageError on ℵ₀.
  std::uint64_t value() const;

  std::string to_string() const;

  friend constexpr ExtendedCardinal operator+(ExtendedCardinal a, ExtendedCardinal b) noexcept {
    if (a.infinite_ || b.infinite_) return aleph0();
    return ExtendedCardinal(a.value_ + b.value_);
  }
  ExtendedCardinal& operator+=(ExtendedCardinal b) noexcept { return *this = *this + b; }
  /// n * ℵ₀ is ℵ₀ for n >= 1 and 0 for n = 0.
  friend constexpr ExtendedCardinal operator*(std::uint64_t n, ExtendedCardinal c) noexcept {
    if (n == 0) return ExtendedCardinal(0);
    if (c.infinite_) return aleph0();
    return ExtendedCardinal(n * c.value_);
  }

  friend constexpr bool operator==(const ExtendedCardinal&, const ExtendedCardinal&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedCardinal& a,
                                                    const ExtendedCardinal& b) noexcept {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater
                                                       : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

}  // namespace fpc
