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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "symmetra/coefficient.hpp"
#include "symmetra/pauli.hpp"

namespace symmetra {

/// Undirected graph with an integer colour on every vertex and a small
/// integer colour on every edge. Adjacency lists are sorted by neighbour.
class ColouredGraph {
 public:
  using Vertex = std::uint32_t;
  struct Arc {
    Vertex to;
    std::uint8_t colour;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
  };

  ColouredGraph() = default;
  explicit ColouredGraph(std::vector<std::uint64_t> vertex_colours)
      : colours_(std::move(vertex_colours)), adj_(colours_.size()) {}

  void add_edge(Vertex u, Vertex v, std::uint8_t colour) {
    adj_[u].push_back({v, colour});
    adj_[v].push_back({u, colour});
    ++num_edges_;
  }
  /// Sorts adjacency lists; call once after the last add_edge.
  void finalize() {
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    edge_colours_.clear();
    for (const auto& list : adj_) {
      for (const auto& a : list) edge_colours_.push_back(a.colour);
    }
    std::sort(edge_colours_.begin(), edge_colours_.end());
    edge_colours_.erase(std::unique(edge_colours_.begin(), edge_colours_.end()),
                        edge_colours_.end());
  }

  std::size_t num_vertices() const { return colours_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::uint64_t colour(Vertex v) const { return colours_[v]; }
  std::span<const std::uint64_t> colours() const { return colours_; }
  std::span<const Arc> neighbours(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  /// Distinct edge colours present, ascending.
  std::span<const std::uint8_t> edge_colours() const { return edge_colours_; }

  /// Colour of edge {u, v}, or -1 when absent.
  int edge_colour(Vertex u, Vertex v) const {
    const auto& list = adj_[u];
    auto it = std::lower_bound(list.begin(), list.end(), Arc{v, 0});
    if (it == list.end() || it->to != v) return -1;
    return it->colour;
  }

 private:
  std::vector<std::uint64_t> colours_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<std::uint8_t> edge_colours_;
  std::size_t num_edges_ = 0;
};

enum class VertexKind : std::uint8_t { Qubit, Term };

struct VertexColor {
  VertexKind kind = VertexKind::Qubit;
  std::size_t coeff_class = 0;  // meaningful for Term only
  friend bool operator==(const VertexColor&, const VertexColor&) = default;
};

/// Edge letter; identity positions never produce an edge.
enum class EdgeColor : std::uint8_t { X = 1, Y = 2, Z = 3 };

/// Sorted table of coefficient-class representatives. The class of a
/// coefficient is the index of its representative.
class CoefficientClasses {
 public:
  CoefficientClasses() = default;
  CoefficientClasses(const CoefficientPolicy& policy,
                     std::initializer_list<const Hamiltonian*> hamiltonians)
      : policy_(policy) {
    for (const Hamiltonian* h : hamiltonians) {
      for (const auto& t : h->terms()) reps_.push_back(policy_.representative(t.coeff));
    }
    std::sort(reps_.begin(), reps_.end());
    reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
  }

  const CoefficientPolicy& policy() const { return policy_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<Coefficient>& representatives() const { return reps_; }

  std::size_t class_of(const Coefficient& c) const {
    Coefficient r = policy_.representative(c);
    auto it = std::lower_bound(reps_.begin(), reps_.end(), r);
    if (it == reps_.end() || !(*it == r)) {
      throw InvalidArgument("coefficient " + c.to_string() +
                            " has no class in this table");
    }
    return static_cast<std::size_t>(it - reps_.begin());
  }

 private:
  CoefficientPolicy policy_;
  std::vector<Coefficient> reps_;
};

/// The coloured bipartite graph of a Hamiltonian.
///
/// Vertices 0..n-1 are the qubits q_1..q_n, vertices n..n+m-1 are the terms
/// in serialized order. Qubits carry vertex colour 0, the term of class c
/// carries colour c + 1. An edge (q_i, t_r) exists iff letter i of p_r is not
/// I, and its colour is that letter.
class ColouredBipartiteGraph {
 public:
  ColouredBipartiteGraph(const Hamiltonian& h, CoefficientClasses classes)
      : n_qubits_(h.num_qubits()),
        n_terms_(h.num_terms()),
        classes_(std::move(classes)) {
    std::vector<std::uint64_t> colours(n_qubits_ + n_terms_, 0);
    vertex_colors_.assign(n_qubits_ + n_terms_, VertexColor{});
    for (std::size_t r = 0; r < n_terms_; ++r) {
      std::size_t cls = classes_.class_of(h.terms()[r].coeff);
      colours[n_qubits_ + r] = cls + 1;
      vertex_colors_[n_qubits_ + r] = {VertexKind::Term, cls};
    }
    graph_ = ColouredGraph(std::move(colours));
    for (std::size_t r = 0; r < n_terms_; ++r) {
      const auto& p = h.terms()[r].pauli;
      for (std::size_t i = 0; i < n_qubits_; ++i) {
        PauliOp op = p[i];
        if (op != PauliOp::I) {
          graph_.add_edge(static_cast<ColouredGraph::Vertex>(i),
                          static_cast<ColouredGraph::Vertex>(n_qubits_ + r),
                          static_cast<std::uint8_t>(op));
        }
      }
    }
    graph_.finalize();
  }

  std::size_t num_qubits() const { return n_qubits_; }
  std::size_t num_terms() const { return n_terms_; }
  std::size_t num_vertices() const { return n_qubits_ + n_terms_; }
  std::size_t num_edges() const { return graph_.num_edges(); }
  const ColouredGraph& graph() const { return graph_; }
  const CoefficientClasses& classes() const { return classes_; }
  const VertexColor& vertex_color(std::size_t v) const { return vertex_colors_[v]; }

  ColouredGraph::Vertex qubit_vertex(std::size_t i) const {
    return static_cast<ColouredGraph::Vertex>(i);
  }
  ColouredGraph::Vertex term_vertex(std::size_t r) const {
    return static_cast<ColouredGraph::Vertex>(n_qubits_ + r);
  }

  /// Reads the Hamiltonian back off the graph, one term per term vertex,
  /// using each class representative as the coefficient.
  Hamiltonian reconstruct() const {
    std::vector<Term> terms;
    for (std::size_t r = 0; r < n_terms_; ++r) {
      std::vector<PauliOp> ops(n_qubits_, PauliOp::I);
      for (const auto& a : graph_.neighbours(term_vertex(r))) {
        ops[a.to] = static_cast<PauliOp>(a.colour);
      }
      terms.push_back({classes_.representatives()[vertex_colors_[n_qubits_ + r].coeff_class],
                       PauliString(ops)});
    }
    return Hamiltonian(std::move(terms));
  }

 private:
  std::size_t n_qubits_;
  std::size_t n_terms_;
  CoefficientClasses classes_;
  ColouredGraph graph_;
  std::vector<VertexColor> vertex_colors_;
};

inline ColouredBipartiteGraph build_graph(
    const Hamiltonian& h,
    const CoefficientPolicy& policy = CoefficientPolicy::exact()) {
  return ColouredBipartiteGraph(h, CoefficientClasses(policy, {&h}));
}

/// Vertex-coloured-only encoding: every edge (q_i, t_r) is replaced by a
/// path q_i - e - t_r through a mid-vertex e coloured by the letter. Vertex
/// numbering keeps qubits first, then terms, then mid-vertices.
inline ColouredGraph build_subdivided_graph(const ColouredBipartiteGraph& g) {
  const auto& src = g.graph();
  const std::uint64_t letter_base = g.classes().size() + 1;
  std::vector<std::uint64_t> colours(src.colours().begin(), src.colours().end());
  std::vector<std::pair<ColouredGraph::Vertex, ColouredGraph::Vertex>> links;
  for (std::size_t r = 0; r < g.num_terms(); ++r) {
    for (const auto& a : src.neighbours(g.term_vertex(r))) {
      auto mid = static_cast<ColouredGraph::Vertex>(colours.size());
      colours.push_back(letter_base + a.colour);
      links.emplace_back(a.to, mid);
      links.emplace_back(g.term_vertex(r), mid);
    }
  }
  ColouredGraph out(std::move(colours));
  for (auto [u, v] : links) out.add_edge(u, v, 0);
  out.finalize();
  return out;
}

struct DegreeReport {
  std::size_t k = 0;               // locality
  std::size_t d = 0;               // interaction degree
  std::size_t max_term_deg = 0;
  std::size_t max_qubit_deg = 0;
  BigInt bound_qubit = 0;          // binom(d, k-1) * 3^k
  // sum_{j<k} binom(d, j) * 3^(j+1): also counts terms of weight below k,
  // which binom(d, k-1) * 3^k misses. Informational; not part of ok().
  BigInt bound_qubit_any_weight = 0;
  bool term_bound_ok = true;       // max_term_deg <= k
  bool qubit_bound_ok = true;      // max_qubit_deg <= bound_qubit
  bool ok() const { return term_bound_ok && qubit_bound_ok; }
};

inline BigInt binomial(std::size_t n, long long k) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return 0;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - static_cast<std::size_t>(k) + static_cast<std::size_t>(i);
    r /= i;
  }
  return r;
}

/// Observed vertex degrees against the analytic bounds deg(t) <= k and
/// deg(q) <= binom(d, k-1) * 3^k.
inline DegreeReport degree_report(const Hamiltonian& h,
                                  const ColouredBipartiteGraph& g) {
  DegreeReport rep;
  rep.k = locality(h);
  rep.d = interaction_degree(h);
  for (std::size_t i = 0; i < g.num_qubits(); ++i) {
    rep.max_qubit_deg = std::max(rep.max_qubit_deg, g.graph().degree(g.qubit_vertex(i)));
  }
  for (std::size_t r = 0; r < g.num_terms(); ++r) {
    rep.max_term_deg = std::max(rep.max_term_deg, g.graph().degree(g.term_vertex(r)));
  }
  BigInt pow3 = 1;
  for (std::size_t i = 0; i < rep.k; ++i) pow3 *= 3;
  rep.bound_qubit = binomial(rep.d, static_cast<long long>(rep.k) - 1) * pow3;
  BigInt p = 3;
  for (std::size_t j = 0; j < rep.k; ++j, p *= 3) {
    rep.bound_qubit_any_weight += binomial(rep.d, static_cast<long long>(j)) * p;
  }
  rep.term_bound_ok = rep.max_term_deg <= rep.k;
  rep.qubit_bound_ok = BigInt(rep.max_qubit_deg) <= rep.bound_qubit;
  return rep;
}

/// Graphviz rendering with qubits on one rank and terms on the other.
inline std::string export_dot(const ColouredBipartiteGraph& g) {
  static constexpr const char* kLetterColour[] = {"black", "red", "darkgreen",
                                                  "blue"};
  std::string out = "graph hamiltonian {\n  rankdir=TB;\n";
  out += "  subgraph qubits {\n    rank=same;\n";
  for (std::size_t i = 0; i < g.num_qubits(); ++i) {
    out += "    q" + std::to_string(i + 1) +
           " [shape=circle, label=\"q" + std::to_string(i + 1) +
           "\", kind=qubit];\n";
  }
  out += "  }\n  subgraph terms {\n    rank=same;\n";
  for (std::size_t r = 0; r < g.num_terms(); ++r) {
    std::size_t cls = g.vertex_color(g.term_vertex(r)).coeff_class;
    out += "    t" + std::to_string(r + 1) + " [shape=box, label=\"" +
           g.classes().representatives()[cls].to_string() +
           "\", kind=term, coeff_class=" + std::to_string(cls) + "];\n";
  }
  out += "  }\n";
  for (std::size_t r = 0; r < g.num_terms(); ++r) {
    for (const auto& a : g.graph().neighbours(g.term_vertex(r))) {
      char letter = to_char(static_cast<PauliOp>(a.colour));
      out += "  q" + std::to_string(a.to + 1) + " -- t" + std::to_string(r + 1) +
             " [label=\"" + letter + "\", color=" + kLetterColour[a.colour] +
             "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace symmetra
