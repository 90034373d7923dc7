// Copyright 2026 The Symmetra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "symmetra/error.hpp"

namespace symmetra {

using BigInt = boost::multiprecision::cpp_int;

/// Exact base-10 number `mantissa * 10^-scale`.
///
/// Always kept normalized (no trailing zero digits in the fraction, zero has
/// scale 0), so structural equality is numeric equality.
class Decimal {
 public:
  Decimal() = default;
  Decimal(BigInt mantissa, std::int32_t scale)
      : mantissa_(std::move(mantissa)), scale_(scale) {
    normalize();
  }
  static Decimal from_int(long long v) { return Decimal(BigInt(v), 0); }

  /// Parses `[-+]?D+(.D+)?`. Throws ParseError on anything else.
  static Decimal parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;
    }
    BigInt mantissa = 0;
    std::int32_t scale = 0;
    std::size_t int_digits = 0;
    while (pos < text.size() && is_digit(text[pos])) {
      mantissa = mantissa * 10 + (text[pos] - '0');
      ++pos;
      ++int_digits;
    }
    if (int_digits == 0) {
      throw ParseError("expected digits in number '" + std::string(text) + "'");
    }
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      std::size_t frac_digits = 0;
      while (pos < text.size() && is_digit(text[pos])) {
        mantissa = mantissa * 10 + (text[pos] - '0');
        ++pos;
        ++frac_digits;
        ++scale;
      }
      if (frac_digits == 0) {
        throw ParseError("expected digits after '.' in '" + std::string(text) +
                         "'");
      }
    }
    if (pos != text.size()) {
      throw ParseError("unexpected character in number '" + std::string(text) +
                       "'");
    }
    return Decimal(negative ? BigInt(-mantissa) : mantissa, scale);
  }

  const BigInt& mantissa() const { return mantissa_; }
  std::int32_t scale() const { return scale_; }
  bool is_zero() const { return mantissa_ == 0; }
  int sign() const { return mantissa_.sign(); }

  Decimal operator-() const { return Decimal(BigInt(-mantissa_), scale_); }

  /// Nearest integer multiple of `step` (as the integer multiplier), rounding
  /// halves away from zero. `step` must be positive.
  BigInt round_to_multiple(const Decimal& step) const {
    if (step.sign() <= 0) throw InvalidArgument("rounding step must be positive");
    // value / step = (m1 * 10^s2) / (m2 * 10^s1)
    BigInt num = mantissa_ * pow10(step.scale_);
    BigInt den = step.mantissa_ * pow10(scale_);
    BigInt abs_num = num < 0 ? BigInt(-num) : num;
    BigInt q = (2 * abs_num + den) / (2 * den);
    return num < 0 ? BigInt(-q) : q;
  }

  std::string to_string() const {
    std::string digits = (mantissa_ < 0 ? BigInt(-mantissa_) : mantissa_).str();
    std::string out = mantissa_ < 0 ? "-" : "";
    if (scale_ == 0) return out + digits;
    auto s = static_cast<std::size_t>(scale_);
    if (digits.size() <= s) digits.insert(0, s - digits.size() + 1, '0');
    return out + digits.substr(0, digits.size() - s) + "." +
           digits.substr(digits.size() - s);
  }

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.scale_ == b.scale_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    std::int32_t s = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
    BigInt lhs = a.mantissa_ * pow10(s - a.scale_);
    BigInt rhs = b.mantissa_ * pow10(s - b.scale_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static BigInt pow10(std::int32_t e) {
    BigInt r = 1;
    for (std::int32_t i = 0; i < e; ++i) r *= 10;
    return r;
  }
  void normalize() {
    if (mantissa_ == 0) {
      scale_ = 0;
      return;
    }
    while (scale_ > 0 && mantissa_ % 10 == 0) {
      mantissa_ /= 10;
      --scale_;
    }
    while (scale_ < 0) {
      mantissa_ *= 10;
      ++scale_;
    }
  }

  BigInt mantissa_ = 0;
  std::int32_t scale_ = 0;
};

}  // namespace symmetra
