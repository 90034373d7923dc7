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

#include <cctype>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symmetra/error.hpp"

namespace symmetra {

/// A bijection on {0, ..., degree-1}.
///
/// Points are 0-based in the API; all textual forms (cycle notation) are
/// 1-based.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  explicit Permutation(std::size_t degree) : image_(degree) {
    std::iota(image_.begin(), image_.end(), Point{0});
  }
  /// Takes ownership of an image array; throws InvalidArgument unless it is a
  /// bijection.
  explicit Permutation(std::vector<Point> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (Point p : image_) {
      if (p >= image_.size() || seen[p]) {
        throw InvalidArgument("image array is not a permutation");
      }
      seen[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const { return image_.size(); }
  Point operator()(Point i) const { return image_[i]; }
  Point operator[](Point i) const { return image_[i]; }
  std::span<const Point> images() const { return image_; }

  bool is_identity() const {
    for (Point i = 0; i < image_.size(); ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> image_;
};

/// result(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DimensionError("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  std::vector<Permutation::Point> img(a.degree());
  for (Permutation::Point i = 0; i < img.size(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& a) {
  std::vector<Permutation::Point> img(a.degree());
  for (Permutation::Point i = 0; i < img.size(); ++i) img[a(i)] = i;
  return Permutation(std::move(img));
}

/// Parses disjoint cycles such as "(2 5)(3 4)" over points 1..degree.
/// Whitespace is free; "" and "()" are the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Permutation::Point> img(degree);
  std::iota(img.begin(), img.end(), Permutation::Point{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(pos) +
                       " in cycle string '" + std::string(text) + "'");
    }
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) {
        throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                         "' in cycle string '" + std::string(text) + "'");
      }
      std::size_t value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree + 1) value = degree + 1;  // saturate, reported below
        ++pos;
      }
      if (value < 1 || value > degree) {
        throw ParseError("point " + std::to_string(value) +
                         " out of range 1.." + std::to_string(degree));
      }
      if (used[value - 1]) {
        throw ParseError("point " + std::to_string(value) +
                         " repeated in cycle string");
      }
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    if (cycle.size() == 1) {
      throw ParseError("cycles must contain at least two points");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[cycle[k]] =
          static_cast<Permutation::Point>(cycle[(k + 1) % cycle.size()]);
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

/// Canonical cycle notation: each cycle starts at its smallest point, cycles
/// ordered by that point, fixed points omitted, identity is "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Permutation::Point start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    out += '(';
    Permutation::Point cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) out += ' ';
      out += std::to_string(cur + 1);
      first = false;
      cur = p(cur);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace symmetra
