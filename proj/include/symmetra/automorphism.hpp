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
#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "symmetra/action.hpp"
#include "symmetra/ham_graph.hpp"
#include "symmetra/perm_group.hpp"
#include "symmetra/refinement.hpp"

namespace symmetra {

/// Outcome of checking a vertex map against the three automorphism
/// conditions separately.
struct AutomorphismCheck {
  bool adjacency = true;
  bool vertex_colour = true;
  bool edge_colour = true;
  bool ok() const { return adjacency && vertex_colour && edge_colour; }
};

/// Checks adjacency, vertex-colour and edge-colour preservation of `phi`
/// by direct comparison of edge sets.
inline AutomorphismCheck check_automorphism(const ColouredGraph& g,
                                            const Permutation& phi) {
  AutomorphismCheck c;
  if (phi.degree() != g.num_vertices()) {
    throw DimensionError("vertex map degree does not match the graph");
  }
  for (ColouredGraph::Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.colour(v) != g.colour(phi(v))) c.vertex_colour = false;
    if (g.degree(v) != g.degree(phi(v))) c.adjacency = false;
    for (const auto& a : g.neighbours(v)) {
      int image = g.edge_colour(phi(v), phi(a.to));
      if (image < 0) {
        c.adjacency = false;
      } else if (image != a.colour) {
        c.edge_colour = false;
      }
    }
  }
  return c;
}

namespace detail {

/// Individualisation-refinement search tree over a coloured graph.
///
/// Explores the tree depth-first, recording automorphisms whenever a leaf
/// matches the first leaf or the current best leaf, and keeping the best
/// leaf under the (invariant sequence, certificate) order as the canonical
/// labelling. Children of a node are pruned when they share an orbit with an
/// explored sibling under the found automorphisms fixing the node's path.
class IrSearch {
 public:
  using Vertex = ColouredGraph::Vertex;

  explicit IrSearch(const ColouredGraph& g) : g_(g), refiner_(g) {}

  void run() {
    OrderedPartition root = OrderedPartition::from_colours(g_.colours());
    std::uint64_t inv = refiner_.refine_all(root);
    Node node{std::move(root), {}, {inv}, true};
    explore(node);
  }

  const std::vector<Permutation>& generators() const { return generators_; }
  /// Vertex at each canonical label.
  const std::vector<Vertex>& canonical_labelling() const { return best_.labelling; }
  const std::vector<std::uint64_t>& certificate() const { return best_.cert; }
  std::size_t nodes() const { return nodes_; }

 private:
  static constexpr int kNoJump = INT_MAX;

  struct Node {
    OrderedPartition partition;
    std::vector<Vertex> path;
    std::vector<std::uint64_t> invariants;
    bool matches_first;
  };

  struct Leaf {
    bool set = false;
    std::vector<Vertex> path;
    std::vector<std::uint64_t> invariants;
    std::vector<Vertex> labelling;
    std::vector<std::uint64_t> cert;
  };

  std::vector<std::uint64_t> certificate_of(const OrderedPartition& p) const {
    const std::size_t n = g_.num_vertices();
    std::vector<std::uint64_t> cert;
    cert.reserve(2 + n + g_.num_edges());
    cert.push_back(n);
    cert.push_back(g_.num_edges());
    auto lab = p.elements();
    for (std::size_t i = 0; i < n; ++i) cert.push_back(g_.colour(lab[i]));
    std::vector<std::uint64_t> edges;
    edges.reserve(g_.num_edges());
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& a : g_.neighbours(lab[i])) {
        std::uint64_t j = p.position(a.to);
        if (j > i) edges.push_back((std::uint64_t{i} << 36) | (j << 8) | a.colour);
      }
    }
    std::sort(edges.begin(), edges.end());
    cert.insert(cert.end(), edges.begin(), edges.end());
    return cert;
  }

  // Vertex map sending the leaf `from` onto the current leaf `to`.
  Permutation leaf_map(const std::vector<Vertex>& from,
                       std::span<const Vertex> to) const {
    std::vector<Permutation::Point> img(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) img[from[i]] = to[i];
    return Permutation(std::move(img));
  }

  static int divergence(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  // Lexicographic sign of `invs` against the best leaf's invariants,
  // restricted to the common length.
  int compare_to_best(const std::vector<std::uint64_t>& invs) const {
    if (!best_.set) return 0;
    std::size_t len = std::min(invs.size(), best_.invariants.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (invs[i] != best_.invariants[i]) return invs[i] < best_.invariants[i] ? -1 : 1;
    }
    return 0;
  }

  // Returns the depth search should resume at; kNoJump for a normal return.
  int explore(Node& node) {
    ++nodes_;
    const int depth = static_cast<int>(node.path.size());
    if (!node.matches_first && compare_to_best(node.invariants) < 0) return kNoJump;

    if (node.partition.is_discrete()) return visit_leaf(node);

    std::uint32_t target = 0;
    std::uint32_t target_size = UINT32_MAX;
    for (std::uint32_t s = 0; s < node.partition.num_vertices();
         s += node.partition.cell_size_at(s)) {
      std::uint32_t size = node.partition.cell_size_at(s);
      if (size > 1 && size < target_size) {
        target = s;
        target_size = size;
      }
    }
    auto elems = node.partition.elements();
    std::vector<Vertex> candidates(elems.begin() + target,
                                   elems.begin() + target + target_size);
    std::sort(candidates.begin(), candidates.end());

    std::vector<Vertex> explored;
    for (Vertex v : candidates) {
      if (!explored.empty() && shares_orbit(node.path, v, explored)) continue;
      Node child{node.partition, node.path, node.invariants, node.matches_first};
      std::uint32_t cell = child.partition.individualize(v);
      std::uint32_t starts[] = {cell};
      std::uint64_t inv = refiner_.refine_from(child.partition, starts);
      inv = detail::mix(inv, cell);
      std::size_t level = child.invariants.size();
      child.path.push_back(v);
      child.invariants.push_back(inv);
      if (child.matches_first) {
        child.matches_first =
            first_.set && level < first_.invariants.size() &&
            first_.invariants[level] == inv;
        if (!first_.set) child.matches_first = true;
      }
      int jump = explore(child);
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int visit_leaf(const Node& node) {
    auto elems = node.partition.elements();
    if (!first_.set) {
      first_.set = true;
      first_.path = node.path;
      first_.invariants = node.invariants;
      first_.labelling.assign(elems.begin(), elems.end());
      first_.cert = certificate_of(node.partition);
      best_ = first_;
      return kNoJump;
    }
    if (node.matches_first && node.invariants.size() == first_.invariants.size()) {
      Permutation gamma = leaf_map(first_.labelling, elems);
      if (check_automorphism(g_, gamma).ok()) {
        record(std::move(gamma));
        return divergence(first_.path, node.path);
      }
    }
    std::vector<std::uint64_t> cert = certificate_of(node.partition);
    int cmp = compare_to_best(node.invariants);
    if (cmp == 0 && node.invariants.size() != best_.invariants.size()) {
      cmp = node.invariants.size() < best_.invariants.size() ? -1 : 1;
    }
    if (cmp == 0) {
      if (cert == best_.cert) {
        Permutation gamma = leaf_map(best_.labelling, elems);
        if (!check_automorphism(g_, gamma).ok()) {
          throw InternalError("equal certificates without an automorphism");
        }
        record(std::move(gamma));
        return divergence(best_.path, node.path);
      }
      cmp = cert < best_.cert ? -1 : 1;
    }
    if (cmp > 0) {
      best_.set = true;
      best_.path = node.path;
      best_.invariants = node.invariants;
      best_.labelling.assign(elems.begin(), elems.end());
      best_.cert = std::move(cert);
    }
    return kNoJump;
  }

  void record(Permutation gamma) {
    if (!gamma.is_identity()) generators_.push_back(std::move(gamma));
  }

  // Whether `v` lies in the orbit of an explored vertex under the group
  // generated by the found automorphisms that fix `path` pointwise.
  bool shares_orbit(const std::vector<Vertex>& path, Vertex v,
                    const std::vector<Vertex>& explored) const {
    const std::size_t n = g_.num_vertices();
    std::vector<Vertex> parent(n);
    for (Vertex i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gen : generators_) {
      bool fixes = std::all_of(path.begin(), path.end(),
                               [&](Vertex p) { return gen(p) == p; });
      if (!fixes) continue;
      any = true;
      for (Vertex i = 0; i < n; ++i) {
        Vertex a = find(i), b = find(gen(i));
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    Vertex root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex u) { return find(u) == root; });
  }

  const ColouredGraph& g_;
  PartitionRefiner refiner_;
  std::vector<Permutation> generators_;
  Leaf first_;
  Leaf best_;
  std::size_t nodes_ = 0;
};

inline std::string to_bytes(const std::vector<std::uint64_t>& words) {
  std::string out;
  out.reserve(words.size() * 8);
  for (std::uint64_t w : words) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((w >> (8 * b)) & 0xff));
  }
  return out;
}

// Colour palette of a Hamiltonian graph: the actual coefficient behind each
// vertex colour, so certificates of graphs with different coefficients never
// coincide.
inline std::string palette_bytes(const ColouredBipartiteGraph& g) {
  std::string out = "symmetra-cert-v1;";
  out += std::to_string(g.num_qubits()) + ";" + std::to_string(g.num_terms()) + ";";
  for (const auto& c : g.classes().representatives()) out += c.to_string() + ";";
  out += '\n';
  return out;
}

}  // namespace detail

/// Generators of Aut(G) and a canonical labelling of a coloured graph.
struct GraphSearchResult {
  std::vector<Permutation> generators;
  std::vector<ColouredGraph::Vertex> canonical_labelling;  // label -> vertex
  std::string certificate;
  std::size_t nodes = 0;
};

inline GraphSearchResult search_graph(const ColouredGraph& g) {
  detail::IrSearch search(g);
  search.run();
  GraphSearchResult r;
  r.generators = search.generators();
  r.canonical_labelling = search.canonical_labelling();
  r.certificate = detail::to_bytes(search.certificate());
  r.nodes = search.nodes();
  return r;
}

/// Equal for two coloured graphs iff they are isomorphic.
inline std::string canonical_form(const ColouredGraph& g) {
  return search_graph(g).certificate;
}

inline std::string canonical_form(const ColouredBipartiteGraph& g) {
  return detail::palette_bytes(g) + canonical_form(g.graph());
}

/// Restriction of a vertex map to the first `n` vertices (the qubits).
/// Throws InternalError if a qubit vertex is sent outside the qubit block.
inline Permutation restrict_to_qubits(const Permutation& perm_on_v, std::size_t n) {
  if (perm_on_v.degree() < n) {
    throw DimensionError("vertex map has fewer than " + std::to_string(n) + " points");
  }
  std::vector<Permutation::Point> img(n);
  for (Permutation::Point i = 0; i < n; ++i) {
    if (perm_on_v(i) >= n) {
      throw InternalError("vertex map sends qubit vertex " + std::to_string(i + 1) +
                          " to a non-qubit vertex");
    }
    img[i] = perm_on_v(i);
  }
  return Permutation(std::move(img));
}

struct AutomorphismResult {
  std::vector<Permutation> generators_on_v;
  std::vector<Permutation> qubit_generators;
  PermutationGroup group;
  std::string canonical_certificate;
  std::size_t search_nodes = 0;
};

/// Aut(G) by individualisation-refinement, restricted to the qubit block.
///
/// Every generator is checked against adjacency, vertex-colour and
/// edge-colour preservation before it is returned. Qubit generators that are
/// already in the group spanned by the earlier ones are dropped.
inline AutomorphismResult automorphism_generators(const ColouredBipartiteGraph& g) {
  GraphSearchResult search = search_graph(g.graph());
  AutomorphismResult r;
  r.canonical_certificate = detail::palette_bytes(g) + search.certificate;
  r.search_nodes = search.nodes;
  r.group = PermutationGroup(g.num_qubits(), std::span<const Permutation>{});
  for (auto& phi : search.generators) {
    if (!check_automorphism(g.graph(), phi).ok()) {
      throw InternalError("search produced a map that is not an automorphism");
    }
    Permutation q = restrict_to_qubits(phi, g.num_qubits());
    if (q.is_identity() || r.group.contains(q)) continue;
    r.qubit_generators.push_back(q);
    r.generators_on_v.push_back(std::move(phi));
    r.group = PermutationGroup(g.num_qubits(), r.qubit_generators);
  }
#ifdef SYMMETRA_MUTATE_SOLVER
  // Deliberately broken build used to test that `verify` catches solver bugs.
  if (!r.qubit_generators.empty()) {
    r.qubit_generators.pop_back();
    r.generators_on_v.pop_back();
    r.group = PermutationGroup(g.num_qubits(), r.qubit_generators);
  }
#endif
  return r;
}

/// G_H of a Hamiltonian: graph construction followed by the automorphism
/// search. Each qubit generator is re-checked directly against `h`.
inline AutomorphismResult find_symmetry_group(
    const Hamiltonian& h,
    const CoefficientPolicy& policy = CoefficientPolicy::exact()) {
  AutomorphismResult r = automorphism_generators(build_graph(h, policy));
  for (const auto& q : r.qubit_generators) {
    if (!is_symmetry(q, h, policy)) {
      throw InternalError("generator " + format_cycles(q) + " is not a symmetry");
    }
  }
  return r;
}

}  // namespace symmetra
