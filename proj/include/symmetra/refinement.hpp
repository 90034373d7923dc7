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
#include <deque>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "symmetra/ham_graph.hpp"

namespace symmetra {

namespace detail {
inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Ordered partition of the vertex set.
///
/// Cells occupy contiguous ranges of `elements()`; a cell is identified by
/// the position of its first element, so the order of cells is the order of
/// their ranges. Order inside a cell carries no meaning.
class OrderedPartition {
 public:
  using Vertex = ColouredGraph::Vertex;

  OrderedPartition() = default;

  /// The partition into colour classes, ordered by ascending colour.
  static OrderedPartition from_colours(std::span<const std::uint64_t> colours) {
    OrderedPartition p(colours.size());
    std::stable_sort(p.elements_.begin(), p.elements_.end(),
                     [&](Vertex a, Vertex b) { return colours[a] < colours[b]; });
    p.rebuild([&](Vertex a, Vertex b) { return colours[a] == colours[b]; });
    return p;
  }

  /// Explicit cells, in order. Throws unless they partition 0..n-1.
  static OrderedPartition from_cells(std::size_t n,
                                     const std::vector<std::vector<Vertex>>& cells) {
    OrderedPartition p(n);
    std::vector<bool> seen(n, false);
    std::size_t pos = 0;
    std::vector<std::uint32_t> tag(n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].empty()) throw InvalidArgument("empty cell in partition");
      for (Vertex v : cells[c]) {
        if (v >= n || seen[v]) throw InvalidArgument("cells do not partition the vertex set");
        seen[v] = true;
        p.elements_[pos++] = v;
        tag[v] = static_cast<std::uint32_t>(c);
      }
    }
    if (pos != n) throw InvalidArgument("cells do not cover the vertex set");
    p.rebuild([&](Vertex a, Vertex b) { return tag[a] == tag[b]; });
    return p;
  }

  std::size_t num_vertices() const { return elements_.size(); }
  std::size_t num_cells() const { return num_cells_; }
  bool is_discrete() const { return num_cells_ == elements_.size(); }
  std::span<const Vertex> elements() const { return elements_; }

  std::uint32_t cell_start(Vertex v) const { return cell_start_[v]; }
  std::uint32_t cell_size_at(std::uint32_t start) const { return cell_size_[start]; }
  std::uint32_t position(Vertex v) const { return position_[v]; }

  /// Cells in order, each listed in ascending vertex order.
  std::vector<std::vector<Vertex>> cells() const {
    std::vector<std::vector<Vertex>> out;
    for (std::uint32_t s = 0; s < elements_.size(); s += cell_size_[s]) {
      std::vector<Vertex> cell(elements_.begin() + s,
                               elements_.begin() + s + cell_size_[s]);
      std::sort(cell.begin(), cell.end());
      out.push_back(std::move(cell));
    }
    return out;
  }

  /// Splits `v` off the front of its cell as a singleton. Returns the start
  /// of the singleton cell.
  std::uint32_t individualize(Vertex v) {
    std::uint32_t s = cell_start_[v];
    std::uint32_t size = cell_size_[s];
    if (size == 1) return s;
    std::uint32_t pv = position_[v];
    Vertex front = elements_[s];
    std::swap(elements_[s], elements_[pv]);
    position_[front] = pv;
    position_[v] = s;
    cell_size_[s] = 1;
    cell_size_[s + 1] = size - 1;
    for (std::uint32_t k = s + 1; k < s + size; ++k) cell_start_[elements_[k]] = s + 1;
    ++num_cells_;
    return s;
  }

 private:
  friend class PartitionRefiner;

  explicit OrderedPartition(std::size_t n)
      : elements_(n), position_(n), cell_start_(n), cell_size_(n, 0) {
    std::iota(elements_.begin(), elements_.end(), Vertex{0});
  }

  template <class Same>
  void rebuild(Same same) {
    num_cells_ = 0;
    std::fill(cell_size_.begin(), cell_size_.end(), 0);
    std::uint32_t start = 0;
    for (std::uint32_t k = 0; k < elements_.size(); ++k) {
      if (k > 0 && !same(elements_[k - 1], elements_[k])) start = k;
      if (start == k) ++num_cells_;
      position_[elements_[k]] = k;
      cell_start_[elements_[k]] = start;
      ++cell_size_[start];
    }
  }

  std::vector<Vertex> elements_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> cell_start_;
  std::vector<std::uint32_t> cell_size_;  // valid at cell starts only
  std::size_t num_cells_ = 0;
};

/// Equitable refinement with respect to edge-coloured adjacency.
///
/// Splitters are processed from a FIFO queue of cell starts; for each
/// splitter and each edge colour, cells are split by the number of
/// neighbours of that colour in the splitter, fragments ordered by
/// ascending count. Every choice depends only on cell positions and counts,
/// so the result is label-invariant. The trace hash summarizes the split
/// events and serves as the node invariant of the search.
class PartitionRefiner {
 public:
  using Vertex = ColouredGraph::Vertex;

  explicit PartitionRefiner(const ColouredGraph& g)
      : g_(g), count_(g.num_vertices(), 0), in_queue_(g.num_vertices(), false) {}

  /// Refines `p` until equitable, starting from every cell as a splitter.
  std::uint64_t refine_all(OrderedPartition& p) {
    std::vector<std::uint32_t> starts;
    for (std::uint32_t s = 0; s < p.num_vertices(); s += p.cell_size_[s]) {
      starts.push_back(s);
    }
    return run(p, starts);
  }

  /// Refines after `p` was changed only by splitting off the cells listed.
  std::uint64_t refine_from(OrderedPartition& p, std::span<const std::uint32_t> starts) {
    return run(p, starts);
  }

 private:
  std::uint64_t run(OrderedPartition& p, std::span<const std::uint32_t> starts) {
    std::uint64_t trace = 0x51ed27d1ull;
    std::deque<std::uint32_t> queue;
    for (std::uint32_t s : starts) {
      if (!in_queue_[s]) {
        in_queue_[s] = true;
        queue.push_back(s);
      }
    }
    std::vector<Vertex> splitter;
    std::vector<Vertex> touched;
    std::vector<std::uint32_t> touched_cells;
    std::vector<std::pair<std::uint32_t, Vertex>> keyed;
    while (!queue.empty() && !p.is_discrete()) {
      std::uint32_t w = queue.front();
      queue.pop_front();
      in_queue_[w] = false;
      splitter.assign(p.elements_.begin() + w,
                      p.elements_.begin() + w + p.cell_size_[w]);
      for (std::uint8_t colour : g_.edge_colours()) {
        touched.clear();
        for (Vertex v : splitter) {
          for (const auto& a : g_.neighbours(v)) {
            if (a.colour != colour) continue;
            if (count_[a.to]++ == 0) touched.push_back(a.to);
          }
        }
        if (touched.empty()) continue;
        touched_cells.clear();
        for (Vertex u : touched) touched_cells.push_back(p.cell_start_[u]);
        std::sort(touched_cells.begin(), touched_cells.end());
        touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                            touched_cells.end());
        for (std::uint32_t s : touched_cells) {
          std::uint32_t size = p.cell_size_[s];
          if (size == 1) continue;
          keyed.clear();
          for (std::uint32_t k = s; k < s + size; ++k) {
            keyed.emplace_back(count_[p.elements_[k]], p.elements_[k]);
          }
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first == keyed.back().first) continue;
          trace = detail::mix(trace, w);
          trace = detail::mix(trace, colour);
          trace = detail::mix(trace, s);
          // Rewrite the range in count order and cut it into fragments.
          std::vector<std::pair<std::uint32_t, std::uint32_t>> fragments;  // start, size
          for (std::uint32_t k = 0; k < size; ++k) {
            Vertex v = keyed[k].second;
            p.elements_[s + k] = v;
            p.position_[v] = s + k;
            if (k == 0 || keyed[k].first != keyed[k - 1].first) {
              fragments.emplace_back(s + k, 0);
              trace = detail::mix(trace, keyed[k].first);
            }
            ++fragments.back().second;
            p.cell_start_[v] = fragments.back().first;
          }
          for (auto [fs, fsize] : fragments) {
            p.cell_size_[fs] = fsize;
            trace = detail::mix(trace, fsize);
          }
          p.num_cells_ += fragments.size() - 1;
          std::size_t skip = fragments.size();
          if (!in_queue_[s]) {
            skip = 0;
            for (std::size_t f = 1; f < fragments.size(); ++f) {
              if (fragments[f].second > fragments[skip].second) skip = f;
            }
          }
          for (std::size_t f = 0; f < fragments.size(); ++f) {
            std::uint32_t fs = fragments[f].first;
            if (f == skip || in_queue_[fs]) continue;
            in_queue_[fs] = true;
            queue.push_back(fs);
          }
        }
        for (Vertex u : touched) count_[u] = 0;
      }
    }
    for (std::uint32_t s : queue) in_queue_[s] = false;
    return detail::mix(trace, p.num_cells());
  }

  const ColouredGraph& g_;
  std::vector<std::uint32_t> count_;
  std::vector<bool> in_queue_;
};

/// Coarsest equitable refinement of `p` with respect to edge-coloured
/// adjacency of `g`.
inline OrderedPartition refine(const ColouredGraph& g, OrderedPartition p) {
  if (p.num_vertices() != g.num_vertices()) {
    throw DimensionError("partition does not match the graph's vertex count");
  }
  PartitionRefiner(g).refine_all(p);
  return p;
}

/// Initial partition by vertex colour, refined.
inline OrderedPartition refine(const ColouredGraph& g) {
  return refine(g, OrderedPartition::from_colours(g.colours()));
}

}  // namespace symmetra
