// Copyright 2026 The qwcgroup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qwc/bitset.hpp"
#include "qwc/errors.hpp"
#include "qwc/pauli.hpp"

namespace qwc {

using Vertex = std::size_t;

/// Largest number of terms a graph may be built over.
inline constexpr std::size_t kMaxGraphVertices = std::size_t{1} << 20;

/**
 * Simple undirected graph on vertices 0..n-1 with a dense bit-matrix
 * adjacency (row i holds the neighbors of i) and cached degrees.
 */
class TermGraph {
 public:
  TermGraph() = default;
  explicit TermGraph(std::size_t n) : rows_(checked_size(n), Bitset(n)), degree_(n, 0) {}

  /// Adopts prebuilt rows. Throws std::invalid_argument unless the rows
  /// describe a symmetric, loop-free relation.
  static TermGraph from_rows(std::vector<Bitset> rows) {
    TermGraph g;
    checked_size(rows.size());
    const std::size_t n = rows.size();
    g.degree_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw std::invalid_argument("adjacency row has wrong width");
      }
      if (rows[i].test(i)) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(i));
      }
      g.degree_[i] = rows[i].count();
    }
    for (std::size_t i = 0; i < n; ++i) {
      rows[i].for_each([&](std::size_t j) {
        if (!rows[j].test(i)) {
          throw std::invalid_argument("adjacency is not symmetric");
        }
      });
    }
    g.rows_ = std::move(rows);
    return g;
  }

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const Bitset &neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::span<const std::size_t> degrees() const { return degree_; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto d : degree_) {
      twice += d;
    }
    return twice / 2;
  }

  void add_edge(Vertex a, Vertex b) {
    if (a == b) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    }
    if (!rows_[a].test(b)) {
      rows_[a].set(b);
      rows_[b].set(a);
      ++degree_[a];
      ++degree_[b];
    }
  }

  /// All vertices as a bitset.
  Bitset all_vertices() const {
    Bitset b(size());
    b.set_all();
    return b;
  }

  /// True iff every pair of distinct members is adjacent.
  bool is_clique(std::span<const Vertex> members) const {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!adjacent(members[i], members[j])) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const TermGraph &, const TermGraph &) = default;

 private:
  static std::size_t checked_size(std::size_t n) {
    if (n > kMaxGraphVertices) {
      throw CapacityError("graph over " + std::to_string(n) + " vertices exceeds the limit of " +
                          std::to_string(kMaxGraphVertices));
    }
    return n;
  }

  std::vector<Bitset> rows_;
  std::vector<std::size_t> degree_;
};

namespace detail {

/// Words packed as symplectic bit vectors: X sets the x bit, Z the z bit,
/// Y both. Two words conflict qubit-wise where both act and the bits differ.
class PackedWords {
 public:
  PackedWords(const Hamiltonian &h)
      : stride_(std::max<std::size_t>(1, (h.n_qubits() + 63) / 64)),
        x_(h.size() * stride_, 0),
        z_(h.size() * stride_, 0) {
    for (std::size_t t = 0; t < h.size(); ++t) {
      for (const auto &f : h.word(t).factors()) {
        std::size_t word = t * stride_ + f.qubit / 64;
        std::uint64_t bit = std::uint64_t{1} << (f.qubit % 64);
        if (f.axis == PauliAxis::X || f.axis == PauliAxis::Y) {
          x_[word] |= bit;
        }
        if (f.axis == PauliAxis::Z || f.axis == PauliAxis::Y) {
          z_[word] |= bit;
        }
      }
    }
  }

  bool qubit_wise_commute(std::size_t a, std::size_t b) const {
    const std::uint64_t *xa = &x_[a * stride_];
    const std::uint64_t *za = &z_[a * stride_];
    const std::uint64_t *xb = &x_[b * stride_];
    const std::uint64_t *zb = &z_[b * stride_];
    for (std::size_t k = 0; k < stride_; ++k) {
      std::uint64_t both = (xa[k] | za[k]) & (xb[k] | zb[k]);
      if ((both & ((xa[k] ^ xb[k]) | (za[k] ^ zb[k]))) != 0) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t stride_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

}  // namespace detail

/**
 * Builds the qubit-wise commutativity graph: vertex i is term i of `h`, and
 * i--j is an edge iff the two words commute qubit-wise. Every pair is tested.
 * Rows are filled in parallel for large inputs.
 */
inline TermGraph build_qwc_graph(const Hamiltonian &h, unsigned threads = 0) {
  const std::size_t n = h.size();
  if (n > kMaxGraphVertices) {
    throw CapacityError("Hamiltonian with " + std::to_string(n) +
                        " terms exceeds the graph limit of " + std::to_string(kMaxGraphVertices));
  }
  detail::PackedWords packed(h);
  std::vector<Bitset> rows(n, Bitset(n));

  // Each worker owns whole rows and fills only j > i, so no row is shared.
  auto fill = [&](std::size_t worker, std::size_t stride) {
    for (std::size_t i = worker; i < n; i += stride) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (packed.qubit_wise_commute(i, j)) {
          rows[i].set(j);
        }
      }
    }
  };
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  if (n < 1024 || threads == 1) {
    fill(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back(fill, w, threads);
    }
    for (auto &t : pool) {
      t.join();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].for_each([&](std::size_t j) {
      if (j > i) {
        rows[j].set(i);
      }
    });
  }
  return TermGraph::from_rows(std::move(rows));
}

/// The graph with exactly the non-edges of `g` as edges.
inline TermGraph complement(const TermGraph &g) {
  std::vector<Bitset> rows;
  rows.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Bitset r = g.neighbors(i);
    r.flip();
    r.reset(i);
    rows.push_back(std::move(r));
  }
  return TermGraph::from_rows(std::move(rows));
}

/// An induced subgraph together with the original label of each vertex.
struct Subgraph {
  TermGraph graph;
  std::vector<Vertex> original;
};

/// Induced subgraph on the vertices of `g` not in `removed`; vertex k of the
/// result is original[k] of `g`, and original is ascending.
inline Subgraph subgraph_without(const TermGraph &g, const Bitset &removed) {
  if (removed.size() != g.size()) {
    throw std::invalid_argument("removed set does not match graph size");
  }
  Subgraph out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!removed.test(v)) {
      out.original.push_back(v);
    }
  }
  const std::size_t m = out.original.size();
  std::vector<Bitset> rows(m, Bitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    const Bitset &row = g.neighbors(out.original[a]);
    for (std::size_t b = 0; b < m; ++b) {
      if (row.test(out.original[b])) {
        rows[a].set(b);
      }
    }
  }
  out.graph = TermGraph::from_rows(std::move(rows));
  return out;
}

inline Subgraph subgraph_without(const TermGraph &g, std::span<const Vertex> removed) {
  Bitset mask(g.size());
  for (Vertex v : removed) {
    if (v >= g.size()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
    }
    mask.set(v);
  }
  return subgraph_without(g, mask);
}

/// Adjacency-list dump, one line per vertex: "i: j k l".
inline void write_adjacency(std::ostream &out, const TermGraph &g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    out << v << ':';
    g.neighbors(v).for_each([&](std::size_t u) { out << ' ' << u; });
    out << '\n';
  }
}

}  // namespace qwc
