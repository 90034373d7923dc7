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

// Brute-force ground truth. Deliberately naive: it enumerates S_n and tests
// every permutation against the term set, sharing nothing with the graph
// search beyond the permutation action itself.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "symmetra/action.hpp"
#include "symmetra/perm_group.hpp"

namespace symmetra {

inline constexpr std::size_t kDefaultOracleMaxQubits = 8;

namespace detail {
inline void check_oracle_size(std::size_t n, std::size_t n_max) {
  if (n > n_max) {
    throw InvalidArgument("brute force limited to " + std::to_string(n_max) +
                          " qubits, got " + std::to_string(n));
  }
}

// Calls f(perm) for every permutation of {0..n-1} in lexicographic image
// order until f returns true.
template <class F>
bool for_each_permutation(std::size_t n, F&& f) {
  std::vector<Permutation::Point> img(n);
  std::iota(img.begin(), img.end(), Permutation::Point{0});
  do {
    if (f(Permutation(img))) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}
}  // namespace detail

/// Every permutation of the qubits that maps the term set onto itself.
inline std::vector<Permutation> brute_force_symmetries(
    const Hamiltonian& h, std::size_t n_max = kDefaultOracleMaxQubits) {
  detail::check_oracle_size(h.num_qubits(), n_max);
  std::vector<Permutation> out;
  detail::for_each_permutation(h.num_qubits(), [&](const Permutation& p) {
    if (is_symmetry(p, h)) out.push_back(p);
    return false;
  });
  return out;
}

/// The group {σ in S_n : σ(T) = T}, built with every such σ as a generator.
inline PermutationGroup brute_force_group(
    const Hamiltonian& h, std::size_t n_max = kDefaultOracleMaxQubits) {
  auto syms = brute_force_symmetries(h, n_max);
  return PermutationGroup(h.num_qubits(), syms);
}

/// First σ in lexicographic order with σ(h1) = h2, if any.
inline std::optional<Permutation> brute_force_equivalent(
    const Hamiltonian& h1, const Hamiltonian& h2,
    std::size_t n_max = kDefaultOracleMaxQubits) {
  if (h1.num_qubits() != h2.num_qubits()) {
    throw DimensionError("Hamiltonians act on " + std::to_string(h1.num_qubits()) +
                         " and " + std::to_string(h2.num_qubits()) + " qubits");
  }
  detail::check_oracle_size(h1.num_qubits(), n_max);
  std::optional<Permutation> witness;
  if (h1.num_terms() != h2.num_terms()) return witness;
  detail::for_each_permutation(h1.num_qubits(), [&](const Permutation& p) {
    for (const auto& t : h1.terms()) {
      const Coefficient* c = h2.find(apply_permutation(p, t.pauli));
      if (c == nullptr || !(*c == t.coeff)) return false;
    }
    witness = p;
    return true;
  });
  return witness;
}

}  // namespace symmetra
