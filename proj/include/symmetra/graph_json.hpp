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

// JSON dump of a Hamiltonian graph. Kept out of ham_graph.hpp so the core
// headers do not depend on nlohmann/json. Schema: docs/graph-json.md.

#include <string>

#include "json.hpp"
#include "symmetra/ham_graph.hpp"

namespace symmetra {

inline nlohmann::ordered_json graph_to_json(const ColouredBipartiteGraph& g) {
  nlohmann::ordered_json j;
  j["n_qubits"] = g.num_qubits();
  j["n_terms"] = g.num_terms();
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : g.classes().representatives()) classes.push_back(c.to_string());
  j["coefficient_classes"] = classes;
  auto vertices = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.num_qubits(); ++i) {
    vertices.push_back({{"id", "q" + std::to_string(i + 1)}, {"kind", "qubit"}});
  }
  for (std::size_t r = 0; r < g.num_terms(); ++r) {
    std::size_t cls = g.vertex_color(g.term_vertex(r)).coeff_class;
    vertices.push_back({{"id", "t" + std::to_string(r + 1)},
                        {"kind", "term"},
                        {"coeff_class", cls},
                        {"coefficient", g.classes().representatives()[cls].to_string()}});
  }
  j["vertices"] = vertices;
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < g.num_terms(); ++r) {
    for (const auto& a : g.graph().neighbours(g.term_vertex(r))) {
      edges.push_back({{"qubit", "q" + std::to_string(a.to + 1)},
                       {"term", "t" + std::to_string(r + 1)},
                       {"letter", std::string(1, to_char(static_cast<PauliOp>(a.colour)))}});
    }
  }
  j["edges"] = edges;
  return j;
}

inline std::string export_json(const ColouredBipartiteGraph& g) {
  return graph_to_json(g).dump(2) + "\n";
}

}  // namespace symmetra
