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
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwc/bitset.hpp"
#include "qwc/cover.hpp"
#include "qwc/errors.hpp"
#include "qwc/graph.hpp"

// Coloring heuristics. Every function here colors the graph it is given; to
// obtain a clique cover of a QWC graph, pass its complement and convert with
// cover_from_coloring. All ties are broken toward the smaller vertex index
// (pairs: lexicographically smaller), so results are deterministic.

namespace qwc {

inline constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

/// Colors vertices in `order`, each with the lowest color not already used by
/// one of its colored neighbors. Throws std::invalid_argument unless `order`
/// is a permutation of the vertices.
inline Coloring sequential_color(const TermGraph &g, std::span<const Vertex> order) {
  const std::size_t n = g.size();
  if (order.size() != n) {
    throw std::invalid_argument("vertex order has " + std::to_string(order.size()) +
                                " entries for a graph of " + std::to_string(n) + " vertices");
  }
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("vertex order is not a permutation");
    }
    seen[v] = true;
  }

  Coloring c;
  c.color_of.assign(n, kUncolored);
  std::vector<std::size_t> stamp(n + 1, 0);
  std::size_t step = 0;
  for (Vertex v : order) {
    ++step;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (c.color_of[u] != kUncolored) {
        stamp[c.color_of[u]] = step;
      }
    });
    std::size_t color = 0;
    while (color < c.n_colors && stamp[color] == step) {
      ++color;
    }
    if (color == c.n_colors) {
      ++c.n_colors;
    }
    c.color_of[v] = color;
  }
  return c;
}

/// Input order: 0, 1, ..., n-1.
inline std::vector<Vertex> order_gc(const TermGraph &g) {
  std::vector<Vertex> order(g.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

/// Non-increasing degree.
inline std::vector<Vertex> order_lf(const TermGraph &g) {
  auto order = order_gc(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

/**
 * Smallest-last order: the last position holds a vertex of minimum degree,
 * and each earlier position a minimum-degree vertex of the graph with all
 * later vertices deleted. Among equal degrees the largest index is peeled
 * first, so tied vertices end up in ascending order.
 */
inline std::vector<Vertex> order_sl(const TermGraph &g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(g.degrees().begin(), g.degrees().end());
  Bitset remaining = g.all_vertices();
  std::vector<Vertex> order(n);
  for (std::size_t pos = n; pos-- > 0;) {
    Vertex pick = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    remaining.for_each([&](std::size_t v) {
      if (degree[v] <= best) {
        best = degree[v];
        pick = v;
      }
    });
    order[pos] = pick;
    remaining.reset(pick);
    g.neighbors(pick).for_each([&](std::size_t u) {
      if (remaining.test(u)) {
        --degree[u];
      }
    });
  }
  return order;
}

/**
 * DSATUR. Repeatedly colors the uncolored vertex whose colored neighbors show
 * the most distinct colors, with the lowest feasible color. Ties go to the
 * larger degree among uncolored vertices, then the smaller index; with
 * nothing colored yet this picks the largest-degree vertex.
 */
inline Coloring dsatur_color(const TermGraph &g) {
  const std::size_t n = g.size();
  Coloring c;
  c.color_of.assign(n, kUncolored);
  std::vector<Bitset> neighbor_colors(n, Bitset(n));
  std::vector<std::size_t> saturation(n, 0);
  std::vector<std::size_t> free_degree(g.degrees().begin(), g.degrees().end());

  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = kUncolored;
    for (Vertex v = 0; v < n; ++v) {
      if (c.color_of[v] != kUncolored) {
        continue;
      }
      if (pick == kUncolored || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && free_degree[v] > free_degree[pick])) {
        pick = v;
      }
    }
    std::size_t color = 0;
    while (color < n && neighbor_colors[pick].test(color)) {
      ++color;
    }
    c.color_of[pick] = color;
    c.n_colors = std::max(c.n_colors, color + 1);
    g.neighbors(pick).for_each([&](std::size_t u) {
      if (c.color_of[u] == kUncolored) {
        --free_degree[u];
        if (!neighbor_colors[u].test(color)) {
          neighbor_colors[u].set(color);
          ++saturation[u];
        }
      }
    });
  }
  return c;
}

/**
 * Recursive largest first. Each color class is seeded with the uncolored
 * vertex of largest degree in the uncolored subgraph. Candidates (N0) are
 * uncolored vertices with no neighbor in the class; the rest of the uncolored
 * vertices form N1. The candidate with most neighbors in N1 joins the class,
 * and its neighbors move from N0 to N1, until N0 is empty.
 */
inline Coloring rlf_color(const TermGraph &g) {
  const std::size_t n = g.size();
  Coloring c;
  c.color_of.assign(n, kUncolored);
  Bitset uncolored = g.all_vertices();

  while (uncolored.any()) {
    const std::size_t color = c.n_colors++;
    Vertex seed = kUncolored;
    std::size_t seed_degree = 0;
    uncolored.for_each([&](std::size_t v) {
      std::size_t d = g.neighbors(v).intersection_count(uncolored);
      if (seed == kUncolored || d > seed_degree) {
        seed = v;
        seed_degree = d;
      }
    });

    Bitset candidates = uncolored;  // N0
    candidates.reset(seed);
    candidates.subtract(g.neighbors(seed));
    Bitset blocked = uncolored & g.neighbors(seed);  // N1
    c.color_of[seed] = color;
    uncolored.reset(seed);

    while (candidates.any()) {
      Vertex pick = kUncolored;
      std::size_t pick_score = 0;
      candidates.for_each([&](std::size_t v) {
        std::size_t s = g.neighbors(v).intersection_count(blocked);
        if (pick == kUncolored || s > pick_score) {
          pick = v;
          pick_score = s;
        }
      });
      c.color_of[pick] = color;
      uncolored.reset(pick);
      candidates.reset(pick);
      Bitset moved = candidates & g.neighbors(pick);
      candidates.subtract(moved);
      blocked |= moved;
    }
  }
  return c;
}

namespace detail {

/// Graph whose vertices can be contracted. A supervertex is named by its
/// smallest member; merging two non-adjacent supervertices gives the union
/// of their neighborhoods.
class MergeGraph {
 public:
  explicit MergeGraph(const TermGraph &g) : active_(g.all_vertices()), members_(g.size()) {
    rows_.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
      rows_.push_back(g.neighbors(v));
      members_[v].push_back(v);
    }
  }

  std::size_t size() const { return rows_.size(); }
  const Bitset &active() const { return active_; }
  const Bitset &row(Vertex v) const { return rows_[v]; }
  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }

  std::size_t common_neighbors(Vertex a, Vertex b) const {
    return rows_[a].intersection_count(rows_[b]);
  }

  /// Active vertices other than v that are not adjacent to v.
  Bitset non_neighbors(Vertex v) const {
    Bitset out = active_;
    out.subtract(rows_[v]);
    out.reset(v);
    return out;
  }

  /// Contracts a and b; returns the surviving name min(a, b).
  Vertex merge(Vertex a, Vertex b) {
    Vertex keep = std::min(a, b);
    Vertex gone = std::max(a, b);
    if (adjacent(keep, gone)) {
      throw std::logic_error("attempted to merge adjacent vertices");
    }
    rows_[gone].for_each([&](std::size_t k) {
      rows_[k].reset(gone);
      rows_[k].set(keep);
    });
    rows_[keep] |= rows_[gone];
    rows_[gone].reset_all();
    active_.reset(gone);
    members_[keep].insert(members_[keep].end(), members_[gone].begin(), members_[gone].end());
    members_[gone].clear();
    return keep;
  }

  /// Colors each original vertex by the rank of its supervertex. Requires
  /// the contracted graph to be complete.
  Coloring to_coloring() const {
    active_.for_each([&](std::size_t v) {
      if (non_neighbors(v).any()) {
        throw std::logic_error("contraction ended before the merged graph became complete");
      }
    });
    Coloring c;
    c.color_of.assign(size(), kUncolored);
    active_.for_each([&](std::size_t v) {
      for (Vertex m : members_[v]) {
        c.color_of[m] = c.n_colors;
      }
      ++c.n_colors;
    });
    return c;
  }

 private:
  std::vector<Bitset> rows_;
  Bitset active_;
  std::vector<std::vector<Vertex>> members_;
};

}  // namespace detail

/**
 * Dutton-Brigham contraction: repeatedly merge the non-adjacent pair with the
 * most common neighbors until the graph is complete; each final supervertex
 * is one color.
 *
 * Common-neighbor counts are kept in an n*n table and updated incrementally,
 * so each merge costs O(n^2) rather than a full recount.
 */
inline Coloring db_color(const TermGraph &g) {
  const std::size_t n = g.size();
  detail::MergeGraph mg(g);
  std::vector<std::uint32_t> common(n * n, 0);
  auto cn = [&](Vertex a, Vertex b) -> std::uint32_t & { return common[a * n + b]; };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      cn(a, b) = cn(b, a) = static_cast<std::uint32_t>(g.neighbors(a).intersection_count(g.neighbors(b)));
    }
  }

  std::vector<Vertex> touched;
  std::vector<std::uint8_t> in_keep(n, 0);
  std::vector<std::uint8_t> in_gone(n, 0);
  while (true) {
    Vertex best_a = kUncolored;
    Vertex best_b = kUncolored;
    std::uint32_t best = 0;
    mg.active().for_each([&](std::size_t a) {
      Bitset others = mg.non_neighbors(a);
      others.for_each([&](std::size_t b) {
        if (b > a && (best_a == kUncolored || cn(a, b) > best)) {
          best_a = a;
          best_b = b;
          best = cn(a, b);
        }
      });
    });
    if (best_a == kUncolored) {
      break;
    }

    // Pairs whose count changes all lie inside the merged neighborhood.
    touched.clear();
    Bitset merged_row = mg.row(best_a) | mg.row(best_b);
    merged_row.for_each([&](std::size_t k) {
      touched.push_back(k);
      in_keep[k] = mg.adjacent(best_a, k) ? 1 : 0;
      in_gone[k] = mg.adjacent(best_b, k) ? 1 : 0;
    });
    for (std::size_t x = 0; x < touched.size(); ++x) {
      for (std::size_t y = x + 1; y < touched.size(); ++y) {
        Vertex k = touched[x];
        Vertex l = touched[y];
        std::uint32_t &v = cn(k, l);
        v = v + 1 - (in_keep[k] & in_keep[l]) - (in_gone[k] & in_gone[l]);
        cn(l, k) = v;
      }
    }
    Vertex keep = mg.merge(best_a, best_b);
    mg.active().for_each([&](std::size_t k) {
      if (k != keep) {
        cn(keep, k) = cn(k, keep) = static_cast<std::uint32_t>(mg.common_neighbors(keep, k));
      }
    });
  }
  return mg.to_coloring();
}

/**
 * COSINE contraction. Start from the lexicographically first non-adjacent
 * pair and merge it; then keep merging the current supervertex with the
 * non-neighbor sharing most common neighbors with it. When the current
 * supervertex has no non-neighbors left, start again from the first
 * non-adjacent pair. Stops when the contracted graph is complete.
 */
inline Coloring cosine_color(const TermGraph &g) {
  detail::MergeGraph mg(g);
  Vertex current = kUncolored;
  while (true) {
    Vertex partner = kUncolored;
    if (current != kUncolored) {
      std::size_t best = 0;
      mg.non_neighbors(current).for_each([&](std::size_t k) {
        std::size_t s = mg.common_neighbors(current, k);
        if (partner == kUncolored || s > best) {
          partner = k;
          best = s;
        }
      });
    }
    if (partner == kUncolored) {
      current = kUncolored;
      for (std::size_t a = mg.active().find_first(); a != Bitset::npos && partner == kUncolored;
           a = mg.active().find_next(a)) {
        std::size_t b = mg.non_neighbors(a).find_next(a);
        if (b != Bitset::npos) {
          current = a;
          partner = b;
        }
      }
      if (partner == kUncolored) {
        break;
      }
    }
    current = mg.merge(current, partner);
  }
  return mg.to_coloring();
}

/// Runs one of the seven coloring heuristics on `g`.
inline Coloring color_with(const TermGraph &g, HeuristicId id) {
  switch (id) {
    case HeuristicId::GC:
      return sequential_color(g, order_gc(g));
    case HeuristicId::LF:
      return sequential_color(g, order_lf(g));
    case HeuristicId::SL:
      return sequential_color(g, order_sl(g));
    case HeuristicId::DSATUR:
      return dsatur_color(g);
    case HeuristicId::RLF:
      return rlf_color(g);
    case HeuristicId::DB:
      return db_color(g);
    case HeuristicId::COSINE:
      return cosine_color(g);
    case HeuristicId::RAMSEY:
    case HeuristicId::BKT:
      break;
  }
  throw std::invalid_argument(std::string(heuristic_name(id)) + " is not a coloring heuristic");
}

/**
 * Turns a proper coloring of complement(qwc) into a clique cover of `qwc`:
 * one group per color, members ascending, groups ordered by smallest member.
 * Throws InvalidCover if a color class is not a clique of `qwc`.
 */
inline CliqueCover cover_from_coloring(const TermGraph &qwc, const Coloring &coloring,
                                       std::optional<HeuristicId> provenance = std::nullopt) {
  if (coloring.color_of.size() != qwc.size()) {
    throw InvalidCover("coloring does not match the graph size");
  }
  std::vector<std::vector<Vertex>> classes(coloring.n_colors);
  for (Vertex v = 0; v < qwc.size(); ++v) {
    if (coloring.color_of[v] >= coloring.n_colors) {
      throw InvalidCover("vertex " + std::to_string(v) + " has no valid color");
    }
    classes[coloring.color_of[v]].push_back(v);
  }
  CliqueCover cover;
  cover.provenance = provenance;
  for (auto &cls : classes) {
    if (cls.empty()) {
      continue;
    }
    if (!qwc.is_clique(cls)) {
      throw InvalidCover("color class starting at vertex " + std::to_string(cls.front()) +
                         " is not a clique of the QWC graph");
    }
    cover.groups.push_back(std::move(cls));
  }
  std::sort(cover.groups.begin(), cover.groups.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  return cover;
}

}  // namespace qwc
