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

#include <optional>
#include <string>
#include <vector>

#include "symmetra/automorphism.hpp"

namespace symmetra {

/// True iff sigma(h1) equals h2 as term sets (coefficients compared under
/// `policy`).
inline bool verify_witness(const Permutation& sigma, const Hamiltonian& h1,
                           const Hamiltonian& h2,
                           const CoefficientPolicy& policy = CoefficientPolicy::exact()) {
  if (sigma.degree() != h1.num_qubits() || h1.num_qubits() != h2.num_qubits()) {
    throw DimensionError("witness of degree " + std::to_string(sigma.degree()) +
                         " for Hamiltonians on " + std::to_string(h1.num_qubits()) +
                         " and " + std::to_string(h2.num_qubits()) + " qubits");
  }
  if (h1.num_terms() != h2.num_terms()) return false;
  for (const auto& t : h1.terms()) {
    const Coefficient* c = h2.find(apply_permutation(sigma, t.pauli));
    if (c == nullptr || !policy.equivalent(*c, t.coeff)) return false;
  }
  return true;
}

/// Decides whether some qubit relabelling maps h1 onto h2 by comparing
/// canonical forms of the two graphs, built with one shared coefficient-class
/// table. On success returns the witness read off the two canonical
/// labellings.
inline std::optional<Permutation> permutation_equivalent(
    const Hamiltonian& h1, const Hamiltonian& h2,
    const CoefficientPolicy& policy = CoefficientPolicy::exact()) {
  if (h1.num_qubits() != h2.num_qubits()) {
    throw DimensionError("Hamiltonians act on " + std::to_string(h1.num_qubits()) +
                         " and " + std::to_string(h2.num_qubits()) + " qubits");
  }
  CoefficientClasses classes(policy, {&h1, &h2});
  ColouredBipartiteGraph g1(h1, classes);
  ColouredBipartiteGraph g2(h2, classes);
  if (g1.num_vertices() != g2.num_vertices()) return std::nullopt;
  GraphSearchResult c1 = search_graph(g1.graph());
  GraphSearchResult c2 = search_graph(g2.graph());
  if (c1.certificate != c2.certificate) return std::nullopt;

  // phi(v) = vertex of g2 carrying the canonical label of v in g1.
  std::vector<Permutation::Point> img(g1.num_vertices());
  for (std::size_t label = 0; label < img.size(); ++label) {
    img[c1.canonical_labelling[label]] = c2.canonical_labelling[label];
  }
  Permutation sigma = restrict_to_qubits(Permutation(std::move(img)), h1.num_qubits());
  if (!verify_witness(sigma, h1, h2, policy)) {
    throw InternalError("canonical forms agree but the witness does not verify");
  }
  return sigma;
}

}  // namespace symmetra
