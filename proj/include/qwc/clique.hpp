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
#include <stdexcept>
#include <string>
#include <vector>

#include "qwc/bitset.hpp"
#include "qwc/cover.hpp"
#include "qwc/errors.hpp"
#include "qwc/graph.hpp"

namespace qwc {

inline constexpr std::size_t kDefaultBktBudget = 10'000'000;

namespace detail {

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const TermGraph &g, std::size_t budget) : g_(g), budget_(budget) {}

  std::vector<Vertex> run() {
    expand(g_.all_vertices());
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  struct Ranked {
    Vertex v;
    std::size_t color;
  };

  // Greedy coloring of P in index order; colors are 1-based. Any clique in P
  // uses distinct colors, so the largest color present bounds its size.
  std::vector<Ranked> color_candidates(const Bitset &candidates) const {
    std::vector<Ranked> ranked;
    Bitset uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset open = uncolored;
      for (std::size_t v = open.find_first(); v != Bitset::npos; v = open.find_first()) {
        ranked.push_back({v, color});
        open.reset(v);
        open.subtract(g_.neighbors(v));
        uncolored.reset(v);
      }
    }
    return ranked;
  }

  void expand(Bitset candidates) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded(budget_);
    }
    if (candidates.none()) {
      if (current_.size() > best_.size()) {
        best_ = current_;
      }
      return;
    }
    std::vector<Ranked> ranked = color_candidates(candidates);
    const std::size_t colors = ranked.back().color;
    if (current_.size() + colors <= best_.size()) {
      return;
    }

    // Pivot: the candidate covering most other candidates. A maximal clique
    // avoiding every non-neighbor of the pivot could be extended by the
    // pivot itself, so only non-neighbors (including the pivot) are branched on.
    Vertex pivot = Bitset::npos;
    std::size_t pivot_cover = 0;
    candidates.for_each([&](std::size_t u) {
      std::size_t c = g_.neighbors(u).intersection_count(candidates);
      if (pivot == Bitset::npos || c > pivot_cover) {
        pivot = u;
        pivot_cover = c;
      }
    });
    const Bitset &pivot_row = g_.neighbors(pivot);
    std::size_t kept_color = 0;
    std::vector<Ranked> branch;
    for (const auto &r : ranked) {
      if (pivot_row.test(r.v)) {
        kept_color = std::max(kept_color, r.color);
      } else {
        branch.push_back(r);
      }
    }
    std::stable_sort(branch.begin(), branch.end(),
                     [](const Ranked &a, const Ranked &b) {
                       return a.color > b.color || (a.color == b.color && a.v < b.v);
                     });

    for (const auto &r : branch) {
      if (current_.size() + std::max(kept_color, r.color) <= best_.size()) {
        break;
      }
      current_.push_back(r.v);
      expand(candidates & g_.neighbors(r.v));
      current_.pop_back();
      candidates.reset(r.v);
    }
  }

  const TermGraph &g_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/**
 * Exact maximum clique by branch and bound: pivoted branching with greedy
 * coloring bounds for pruning. Returns the first maximum clique found, members
 * ascending. Throws BudgetExceeded after `budget` search nodes and
 * std::invalid_argument on an empty graph.
 */
inline std::vector<Vertex> max_clique_bkt(const TermGraph &g,
                                          std::size_t budget = kDefaultBktBudget) {
  if (g.empty()) {
    throw std::invalid_argument("maximum clique of an empty graph");
  }
  return detail::MaxCliqueSearch(g, budget).run();
}

namespace detail {

// clique(S) = larger of {v} + clique(S & N(v)) and clique(S - N[v]) for the
// smallest v in S, earlier candidate winning ties. The second branch is
// unrolled into the loop, so recursion depth is bounded by the clique size.
inline std::vector<Vertex> ramsey_recurse(const TermGraph &g, Bitset candidates) {
  std::vector<Vertex> best;
  for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_first()) {
    std::vector<Vertex> with = ramsey_recurse(g, candidates & g.neighbors(v));
    with.push_back(v);
    if (with.size() > best.size()) {
      best = std::move(with);
    }
    candidates.reset(v);
    candidates.subtract(g.neighbors(v));
  }
  return best;
}

}  // namespace detail

/**
 * Polynomial Ramsey clique: recursive split on the smallest-index pivot into
 * its neighborhood and non-neighborhood. The winner is then greedily
 * extended (smallest index first) so the result is always a maximal clique.
 * Members ascending; empty only for an empty graph.
 */
inline std::vector<Vertex> ramsey_clique(const TermGraph &g) {
  std::vector<Vertex> clique = detail::ramsey_recurse(g, g.all_vertices());
  Bitset common = g.all_vertices();
  for (Vertex v : clique) {
    common &= g.neighbors(v);
  }
  for (std::size_t v = common.find_first(); v != Bitset::npos; v = common.find_first()) {
    clique.push_back(v);
    common &= g.neighbors(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

/// True iff no vertex outside `clique` is adjacent to all of it.
inline bool is_maximal_clique(const TermGraph &g, const std::vector<Vertex> &clique) {
  if (!g.is_clique(clique)) {
    return false;
  }
  Bitset common = g.all_vertices();
  for (Vertex v : clique) {
    common &= g.neighbors(v);
  }
  return common.none();
}

/**
 * Clique removal: extract a clique with `finder` (BKT or RAMSEY), record it,
 * delete its vertices, and repeat until nothing is left. Groups are in
 * extraction order with original vertex labels, members ascending.
 */
inline CliqueCover clique_removal_cover(const TermGraph &g, HeuristicId finder,
                                        std::size_t bkt_budget = kDefaultBktBudget) {
  if (finder != HeuristicId::BKT && finder != HeuristicId::RAMSEY) {
    throw std::invalid_argument(std::string(heuristic_name(finder)) +
                                " is not a clique-removal heuristic");
  }
  CliqueCover cover;
  cover.provenance = finder;
  Bitset removed(g.size());
  std::size_t left = g.size();
  while (left > 0) {
    Subgraph sub = subgraph_without(g, removed);
    std::vector<Vertex> local = finder == HeuristicId::BKT ? max_clique_bkt(sub.graph, bkt_budget)
                                                           : ramsey_clique(sub.graph);
    std::vector<Vertex> group;
    group.reserve(local.size());
    for (Vertex v : local) {
      group.push_back(sub.original[v]);
      removed.set(sub.original[v]);
    }
    left -= group.size();
    cover.groups.push_back(std::move(group));
  }
  return cover;
}

}  // namespace qwc
