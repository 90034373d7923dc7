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

#include <string>
#include <vector>

#include "symmetra/pauli.hpp"
#include "symmetra/permutation.hpp"

namespace symmetra {

namespace detail {
inline void check_degree(const Permutation& perm, std::size_t n) {
  if (perm.degree() != n) {
    throw DimensionError("permutation of degree " +
                         std::to_string(perm.degree()) + " applied to " +
                         std::to_string(n) + " qubits");
  }
}
}  // namespace detail

/// Relabels qubits: the letter at position j moves to position perm(j).
inline PauliString apply_permutation(const Permutation& perm,
                                     const PauliString& p) {
  detail::check_degree(perm, p.size());
  PauliStringBuilder out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    PauliOp op = p[j];
    if (op != PauliOp::I) out.set(perm(static_cast<Permutation::Point>(j)), op);
  }
  return std::move(out).build();
}

/// Applies `perm` to every string; coefficients are carried unchanged.
inline Hamiltonian permute_hamiltonian(const Permutation& perm,
                                       const Hamiltonian& h) {
  detail::check_degree(perm, h.num_qubits());
  std::vector<Term> terms;
  terms.reserve(h.num_terms());
  for (const auto& t : h.terms()) {
    terms.push_back({t.coeff, apply_permutation(perm, t.pauli)});
  }
  return Hamiltonian(std::move(terms));
}

/// True iff `perm(h) == h` as term sets, comparing coefficients under
/// `policy`.
inline bool is_symmetry(const Permutation& perm, const Hamiltonian& h,
                        const CoefficientPolicy& policy = CoefficientPolicy::exact()) {
  detail::check_degree(perm, h.num_qubits());
  for (const auto& t : h.terms()) {
    const Coefficient* c = h.find(apply_permutation(perm, t.pauli));
    if (c == nullptr || !policy.equivalent(*c, t.coeff)) return false;
  }
  return true;
}

}  // namespace symmetra
