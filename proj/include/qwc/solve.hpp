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

#include <cstddef>
#include <utility>

#include "qwc/clique.hpp"
#include "qwc/coloring.hpp"
#include "qwc/cover.hpp"
#include "qwc/graph.hpp"
#include "qwc/pauli.hpp"

namespace qwc {

/// A Hamiltonian with its QWC graph and the graph's complement, built once
/// and shared by every heuristic.
struct GroupingProblem {
  Hamiltonian hamiltonian;
  TermGraph graph;
  TermGraph complement_graph;

  explicit GroupingProblem(Hamiltonian h)
      : hamiltonian(std::move(h)),
        graph(build_qwc_graph(hamiltonian)),
        complement_graph(complement(graph)) {}
};

/// Clique cover of `qwc` by heuristic `id`. Coloring heuristics run on
/// `complement`; BKT and Ramsey run clique removal on `qwc`.
inline CliqueCover solve(const TermGraph &qwc, const TermGraph &complement, HeuristicId id,
                         std::size_t bkt_budget = kDefaultBktBudget) {
  if (id == HeuristicId::BKT || id == HeuristicId::RAMSEY) {
    return clique_removal_cover(qwc, id, bkt_budget);
  }
  return cover_from_coloring(qwc, color_with(complement, id), id);
}

inline CliqueCover solve(const GroupingProblem &p, HeuristicId id,
                         std::size_t bkt_budget = kDefaultBktBudget) {
  return solve(p.graph, p.complement_graph, id, bkt_budget);
}

}  // namespace qwc
