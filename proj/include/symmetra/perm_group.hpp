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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symmetra/decimal.hpp"
#include "symmetra/permutation.hpp"

namespace symmetra {

/// A permutation group given by generators, with a base and strong generating
/// set computed by deterministic Schreier-Sims.
///
/// The group is immutable once built; membership and order queries are
/// read-only.
class PermutationGroup {
 public:
  using Point = Permutation::Point;

  PermutationGroup() = default;

  /// Builds the group generated by `generators` on `degree` points. Every
  /// generator must have that degree.
  PermutationGroup(std::size_t degree, std::span<const Permutation> generators)
      : degree_(degree) {
    for (const auto& g : generators) {
      if (g.degree() != degree) {
        throw DimensionError("generator of degree " +
                             std::to_string(g.degree()) +
                             " in group of degree " + std::to_string(degree));
      }
    }
    for (const auto& g : generators) {
      generators_.push_back(g);
      add_generator(g);
    }
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& lvl : levels_) b.push_back(lvl.base_point);
    return b;
  }

  /// Union of the per-level strong generators, without repeats.
  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& lvl : levels_) {
      for (const auto& s : lvl.gens) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
      }
    }
    return out;
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& lvl : levels_) n *= lvl.orbit.size();
    return n;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) {
      throw DimensionError("membership test with permutation of degree " +
                           std::to_string(p.degree()) + " in group of degree " +
                           std::to_string(degree_));
    }
    auto [residue, level] = sift(p, 0);
    return level == levels_.size() && residue.is_identity();
  }

  /// Orbits of the natural action, each sorted, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<Point> parent(degree_);
    for (Point i = 0; i < degree_; ++i) parent[i] = i;
    auto find = [&](Point x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      for (Point i = 0; i < degree_; ++i) {
        Point a = find(i), b = find(g(i));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::vector<Point>> out;
    std::vector<int> slot(degree_, -1);
    for (Point i = 0; i < degree_; ++i) {
      Point r = find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return out;
  }

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;                     // fix earlier base points
    std::vector<Point> orbit;                          // orbit of base_point
    std::vector<std::optional<Permutation>> transversal;  // u(base_point) = b
  };

  void rebuild_orbit(Level& lvl) const {
    lvl.orbit.assign(1, lvl.base_point);
    lvl.transversal.assign(degree_, std::nullopt);
    lvl.transversal[lvl.base_point] = Permutation::identity(degree_);
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      Point beta = lvl.orbit[k];
      for (const auto& s : lvl.gens) {
        Point gamma = s(beta);
        if (!lvl.transversal[gamma]) {
          lvl.transversal[gamma] = compose(s, *lvl.transversal[beta]);
          lvl.orbit.push_back(gamma);
        }
      }
    }
  }

  // Strips `p` through levels [from, end). Returns the residue and the level
  // at which stripping stopped (levels_.size() when it passed all levels).
  std::pair<Permutation, std::size_t> sift(Permutation p,
                                           std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      Point beta = p(levels_[j].base_point);
      const auto& u = levels_[j].transversal[beta];
      if (!u) return {std::move(p), j};
      p = compose(inverse(*u), p);
    }
    return {std::move(p), levels_.size()};
  }

  Point first_moved_point(const Permutation& p) const {
    for (Point i = 0; i < degree_; ++i) {
      if (p(i) != i) return i;
    }
    return 0;
  }

  void append_level(Point base_point) {
    Level lvl;
    lvl.base_point = base_point;
    levels_.push_back(std::move(lvl));
  }

  void add_generator(const Permutation& g) {
    if (g.is_identity()) return;
    auto [residue, stop] = sift(g, 0);
    if (stop == levels_.size() && residue.is_identity()) return;

    bool fixes_base = true;
    for (const auto& lvl : levels_) fixes_base &= g(lvl.base_point) == lvl.base_point;
    if (fixes_base) append_level(first_moved_point(g));
    for (auto& lvl : levels_) {
      lvl.gens.push_back(g);
      rebuild_orbit(lvl);
      if (g(lvl.base_point) != lvl.base_point) break;
    }
    complete();
  }

  // Schreier-Sims closure: checks every Schreier generator on every level,
  // adding sift residues as new strong generators until all sift through.
  void complete() {
    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t lvl_idx = i - 1;
      bool restarted = false;
      for (std::size_t k = 0; k < levels_[lvl_idx].orbit.size() && !restarted;
           ++k) {
        Point beta = levels_[lvl_idx].orbit[k];
        for (std::size_t s_idx = 0; s_idx < levels_[lvl_idx].gens.size();
             ++s_idx) {
          const Level& lvl = levels_[lvl_idx];
          const Permutation& s = lvl.gens[s_idx];
          Permutation h = compose(inverse(*lvl.transversal[s(beta)]),
                                  compose(s, *lvl.transversal[beta]));
          if (h.is_identity()) continue;
          auto [residue, stop] = sift(std::move(h), lvl_idx + 1);
          if (stop == levels_.size() && residue.is_identity()) continue;
          if (stop == levels_.size()) append_level(first_moved_point(residue));
          for (std::size_t l = lvl_idx + 1; l <= stop; ++l) {
            levels_[l].gens.push_back(residue);
            rebuild_orbit(levels_[l]);
          }
          i = stop + 1;
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

inline PermutationGroup build_group(std::size_t degree,
                                    std::span<const Permutation> generators) {
  return PermutationGroup(degree, generators);
}

inline bool contains(const PermutationGroup& g, const Permutation& p) {
  return g.contains(p);
}

/// Equal orders and every generator of `a` lies in `b`.
inline bool groups_equal(const PermutationGroup& a, const PermutationGroup& b) {
  if (a.degree() != b.degree()) {
    throw DimensionError("comparing groups of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  if (a.order() != b.order()) return false;
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

/// 1-based cycle-like rendering of an orbit partition: "{1,2},{3}".
inline std::string format_orbits(
    const std::vector<std::vector<Permutation::Point>>& orbits) {
  std::string out;
  for (const auto& orb : orbits) {
    if (!out.empty()) out += ',';
    out += '{';
    for (std::size_t k = 0; k < orb.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(orb[k] + 1);
    }
    out += '}';
  }
  return out;
}

}  // namespace symmetra
