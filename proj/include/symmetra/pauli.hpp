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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "symmetra/coefficient.hpp"
#include "symmetra/error.hpp"

namespace symmetra {

/// Single-qubit Pauli operator. The enumerator order I < X < Y < Z is the
/// order used for canonical serialization.
enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(PauliOp op) { return "IXYZ"[static_cast<int>(op)]; }

/// Fixed-length word over {I, X, Y, Z}, packed two bits per qubit.
///
/// Qubit 0 occupies the most significant bits of word 0, so comparing the
/// packed words numerically is the lexicographic order on letters.
class PauliString {
 public:
  static constexpr std::size_t kPerWord = 32;

  PauliString() = default;
  explicit PauliString(std::size_t n) : n_(n), words_(word_count(n), 0) {}

  explicit PauliString(const std::vector<PauliOp>& ops) : PauliString(ops.size()) {
    for (std::size_t i = 0; i < ops.size(); ++i) put(i, ops[i]);
  }

  /// Parses letters I/X/Y/Z; throws ParseError on any other character.
  static PauliString parse(std::string_view letters) {
    if (letters.empty()) throw ParseError("empty Pauli string");
    PauliString p(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
      switch (letters[i]) {
        case 'I': break;
        case 'X': p.put(i, PauliOp::X); break;
        case 'Y': p.put(i, PauliOp::Y); break;
        case 'Z': p.put(i, PauliOp::Z); break;
        default:
          throw ParseError("illegal character '" + std::string(1, letters[i]) +
                           "' in Pauli string '" + std::string(letters) + "'");
      }
    }
    return p;
  }

  std::size_t size() const { return n_; }

  PauliOp operator[](std::size_t i) const {
    auto shift = 62 - 2 * (i % kPerWord);
    return static_cast<PauliOp>((words_[i / kPerWord] >> shift) & 3u);
  }

  /// Number of non-identity positions.
  std::size_t weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) {
      std::uint64_t nz = (word | (word >> 1)) & 0x5555555555555555ull;
      w += static_cast<std::size_t>(__builtin_popcountll(nz));
    }
    return w;
  }

  /// Indices of non-identity positions, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)[i] != PauliOp::I) s.push_back(i);
    }
    return s;
  }

  std::string to_string() const {
    std::string s(n_, 'I');
    for (std::size_t i = 0; i < n_; ++i) s[i] = to_char((*this)[i]);
    return s;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.words_ <=> b.words_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  friend class PauliStringBuilder;

  static std::size_t word_count(std::size_t n) {
    return (n + kPerWord - 1) / kPerWord;
  }
  // Only valid on a position still holding I.
  void put(std::size_t i, PauliOp op) {
    auto shift = 62 - 2 * (i % kPerWord);
    words_[i / kPerWord] |= static_cast<std::uint64_t>(op) << shift;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Write-once assembly of a PauliString (used by the permutation action).
class PauliStringBuilder {
 public:
  explicit PauliStringBuilder(std::size_t n) : p_(n) {}
  void set(std::size_t i, PauliOp op) { p_.put(i, op); }
  PauliString build() && { return std::move(p_); }

 private:
  PauliString p_;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const { return p.hash(); }
};

struct Term {
  Coefficient coeff;
  PauliString pauli;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A non-empty set of terms over n qubits with pairwise distinct strings.
///
/// Terms are held sorted by Pauli string, so two Hamiltonians are equal iff
/// their term sets are equal.
class Hamiltonian {
 public:
  /// Validates and canonicalizes. Duplicate strings with equal coefficients
  /// collapse; conflicting coefficients, mixed lengths, zero coefficients and
  /// an empty list are errors.
  explicit Hamiltonian(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InvalidArgument("Hamiltonian has no terms");
    n_ = terms_.front().pauli.size();
    for (const auto& t : terms_) {
      if (t.pauli.size() != n_) {
        throw InvalidArgument("inconsistent Pauli string lengths (" +
                              std::to_string(n_) + " vs " +
                              std::to_string(t.pauli.size()) + ")");
      }
      if (t.coeff.is_zero()) {
        throw InvalidArgument("zero coefficient on " + t.pauli.to_string());
      }
    }
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) { return a.pauli < b.pauli; });
    std::vector<Term> unique;
    unique.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!unique.empty() && unique.back().pauli == t.pauli) {
        if (!(unique.back().coeff == t.coeff)) {
          throw InvalidArgument("conflicting coefficients for " +
                                t.pauli.to_string());
        }
        continue;
      }
      unique.push_back(std::move(t));
    }
    terms_ = std::move(unique);
    index_.reserve(terms_.size());
    for (std::size_t r = 0; r < terms_.size(); ++r) index_[terms_[r].pauli] = r;
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of `p`, or nullptr when p is not a term.
  const Coefficient* find(const PauliString& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? nullptr : &terms_[it->second].coeff;
  }

  friend bool operator==(const Hamiltonian& a, const Hamiltonian& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
  std::unordered_map<PauliString, std::size_t, PauliStringHash> index_;
};

/// Reads the line format `<coefficient> <pauli-string>`; `#` starts a
/// comment, blank lines are skipped. Errors carry the offending line number.
inline Hamiltonian parse_hamiltonian(std::string_view text) {
  std::vector<Term> terms;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::string coeff_tok, string_tok, extra;
    if (!(in >> coeff_tok)) continue;
    if (!(in >> string_tok)) {
      throw ParseError("expected '<coefficient> <pauli-string>'", line_no);
    }
    if (in >> extra) {
      throw ParseError("unexpected trailing token '" + extra + "'", line_no);
    }
    try {
      Coefficient c = Coefficient::parse(coeff_tok);
      if (c.is_zero()) throw ParseError("zero coefficient");
      PauliString p = PauliString::parse(string_tok);
      if (!terms.empty() && p.size() != terms.front().pauli.size()) {
        throw ParseError("inconsistent lengths: expected " +
                         std::to_string(terms.front().pauli.size()) +
                         " qubits, got " + std::to_string(p.size()));
      }
      terms.push_back({std::move(c), std::move(p)});
      lines.push_back(line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (end == text.size()) break;
  }
  if (terms.empty()) throw ParseError("no terms in input");
  // Conflicting duplicates are reported at the later line.
  std::unordered_map<PauliString, std::size_t, PauliStringHash> first;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    auto [it, inserted] = first.emplace(terms[k].pauli, k);
    if (!inserted && !(terms[it->second].coeff == terms[k].coeff)) {
      throw ParseError("duplicate Pauli string " + terms[k].pauli.to_string() +
                           " with conflicting coefficient (first on line " +
                           std::to_string(lines[it->second]) + ")",
                       lines[k]);
    }
  }
  return Hamiltonian(std::move(terms));
}

/// One `<coefficient> <string>` line per term, in I<X<Y<Z lexicographic
/// string order, each terminated by '\n'.
inline std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::string out;
  for (const auto& t : h.terms()) {
    out += t.coeff.to_string();
    out += ' ';
    out += t.pauli.to_string();
    out += '\n';
  }
  return out;
}

/// Maximum number of non-identity letters in a term.
inline std::size_t locality(const Hamiltonian& h) {
  std::size_t k = 0;
  for (const auto& t : h.terms()) k = std::max(k, t.pauli.weight());
  return k;
}

/// Maximum degree of the qubit interaction graph, where two qubits are
/// adjacent iff some term acts non-trivially on both.
inline std::size_t interaction_degree(const Hamiltonian& h) {
  const std::size_t n = h.num_qubits();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& t : h.terms()) {
    auto s = t.pauli.support();
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        adj[s[a]][s[b]] = adj[s[b]][s[a]] = true;
      }
    }
  }
  std::size_t d = 0;
  for (const auto& row : adj) {
    d = std::max(d, static_cast<std::size_t>(std::count(row.begin(), row.end(), true)));
  }
  return d;
}

}  // namespace symmetra
