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
#include <string>
#include <string_view>
#include <utility>

#include "symmetra/decimal.hpp"

namespace symmetra {

/// Exact complex coefficient re + im*i. Never zero inside a Hamiltonian.
struct Coefficient {
  Decimal re;
  Decimal im;

  static Coefficient real(long long v) { return {Decimal::from_int(v), {}}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  /// Grammar: `[-+]?D+(.D+)?([+-]D+(.D+)?i)?`.
  static Coefficient parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty coefficient");
    if (text.back() != 'i') return {Decimal::parse(text), {}};
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = text.size() - 1; k > 0; --k) {
      if (text[k] == '+' || text[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string_view::npos) {
      throw ParseError("imaginary part needs an explicit real part in '" +
                       std::string(text) + "' (write 0+bi)");
    }
    Decimal re = Decimal::parse(text.substr(0, split));
    std::string_view im_text = text.substr(split, text.size() - split - 1);
    if (im_text.size() < 2) {
      throw ParseError("malformed imaginary part in '" + std::string(text) +
                       "'");
    }
    return {std::move(re), Decimal::parse(im_text)};
  }

  std::string to_string() const {
    std::string out = re.to_string();
    if (!im.is_zero()) {
      std::string im_text = im.to_string();
      out += im.sign() < 0 ? im_text : "+" + im_text;
      out += 'i';
    }
    return out;
  }

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
  friend std::strong_ordering operator<=>(const Coefficient& a,
                                          const Coefficient& b) {
    if (auto c = a.re <=> b.re; c != 0) return c;
    return a.im <=> b.im;
  }
};

/// How coefficients are grouped into vertex colour classes.
///
/// Exact compares coefficients exactly. Quantized maps re and im each to the
/// nearest multiple of `epsilon` (halves away from zero) and compares the
/// results, which is still an equivalence relation.
class CoefficientPolicy {
 public:
  enum class Mode { Exact, Quantized };

  static CoefficientPolicy exact() { return CoefficientPolicy(); }
  static CoefficientPolicy quantized(Decimal epsilon) {
    if (epsilon.sign() <= 0) {
      throw InvalidArgument("quantization epsilon must be positive");
    }
    CoefficientPolicy p;
    p.mode_ = Mode::Quantized;
    p.epsilon_ = std::move(epsilon);
    return p;
  }

  Mode mode() const { return mode_; }
  const Decimal& epsilon() const { return epsilon_; }

  /// Representative of the class containing `c`.
  Coefficient representative(const Coefficient& c) const {
    if (mode_ == Mode::Exact) return c;
    auto snap = [&](const Decimal& d) {
      return Decimal(d.round_to_multiple(epsilon_) * epsilon_.mantissa(),
                     epsilon_.scale());
    };
    return {snap(c.re), snap(c.im)};
  }

  bool equivalent(const Coefficient& a, const Coefficient& b) const {
    return mode_ == Mode::Exact ? a == b
                                : representative(a) == representative(b);
  }

 private:
  Mode mode_ = Mode::Exact;
  Decimal epsilon_;
};

}  // namespace symmetra
