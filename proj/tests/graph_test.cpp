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

#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "gtest/gtest.h"
#include "qwc/graph.hpp"
#include "test_util.hpp"

using namespace qwc;
using namespace qwc::testing;

namespace {

std::set<std::pair<Vertex, Vertex>> edge_set(const TermGraph &g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 0; a < g.size(); ++a) {
    g.neighbors(a).for_each([&](std::size_t b) {
      if (a < b) {
        out.emplace(a, b);
      }
    });
  }
  return out;
}

void expect_consistent(const TermGraph &g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    EXPECT_FALSE(g.adjacent(v, v));
    EXPECT_EQ(g.degree(v), g.neighbors(v).count());
    g.neighbors(v).for_each([&](std::size_t u) { EXPECT_TRUE(g.adjacent(u, v)); });
  }
}

Hamiltonian random_hamiltonian(std::size_t terms, std::size_t qubits, std::mt19937_64 &rng) {
  std::vector<HamiltonianTerm> t;
  for (std::size_t i = 0; i < terms; ++i) {
    t.push_back({1.0, random_word(qubits, rng)});
  }
  return Hamiltonian(t);
}

}  // namespace

TEST(build_qwc_graph, model_hamiltonian) {
  TermGraph g = build_qwc_graph(model_hamiltonian());
  ASSERT_EQ(g.size(), 7U);
  expect_consistent(g);
  EXPECT_TRUE(g.is_clique(std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(g.is_clique(std::vector<Vertex>{4, 5, 6}));
  // Z0 and Z0 Z1 both avoid qubits 2 and 3, so each commutes qubit-wise with
  // X2 X3; no other pair across the two families does.
  std::set<std::pair<Vertex, Vertex>> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                                  {4, 5}, {4, 6}, {5, 6}, {0, 4}, {1, 4}};
  EXPECT_EQ(edge_set(g), expected);
}

TEST(build_qwc_graph, trivial_inputs) {
  TermGraph one = build_qwc_graph(parse_hamiltonian("1.0 [X0]\n"));
  EXPECT_EQ(one.size(), 1U);
  EXPECT_EQ(one.edge_count(), 0U);

  TermGraph anti = build_qwc_graph(parse_hamiltonian("1.0 [X0]\n1.0 [Y0]\n1.0 [Z0]\n"));
  EXPECT_EQ(anti.size(), 3U);
  EXPECT_EQ(anti.edge_count(), 0U);

  EXPECT_EQ(build_qwc_graph(Hamiltonian()).size(), 0U);
}

TEST(build_qwc_graph, identity_term_joins_everything) {
  TermGraph g = build_qwc_graph(parse_hamiltonian("1.0 []\n1.0 [X0]\n1.0 [Y0]\n1.0 [Z0 Z70]\n"));
  EXPECT_EQ(g.degree(0), 3U);
  EXPECT_EQ(g.edge_count(), 3U);
}

TEST(build_qwc_graph, edges_match_words) {
  std::mt19937_64 rng(23);
  for (std::size_t qubits : {2U, 5U, 9U, 70U}) {
    Hamiltonian h = random_hamiltonian(60, qubits, rng);
    TermGraph g = build_qwc_graph(h);
    expect_consistent(g);
    for (Vertex a = 0; a < g.size(); ++a) {
      for (Vertex b = a + 1; b < g.size(); ++b) {
        ASSERT_EQ(g.adjacent(a, b), qubit_wise_commute(h.word(a), h.word(b)));
        if (g.adjacent(a, b)) {
          ASSERT_TRUE(fully_commute(h.word(a), h.word(b)));
        }
      }
    }
  }
}

TEST(build_qwc_graph, threaded_build_matches_serial) {
  std::mt19937_64 rng(29);
  Hamiltonian h = random_hamiltonian(1500, 10, rng);
  EXPECT_EQ(build_qwc_graph(h, 4), build_qwc_graph(h, 1));
}

TEST(term_graph, capacity_guard) {
  EXPECT_THROW(TermGraph(kMaxGraphVertices + 1), CapacityError);
}

TEST(term_graph, from_rows_validates) {
  std::vector<Bitset> rows(2, Bitset(2));
  rows[0].set(1);
  EXPECT_THROW(TermGraph::from_rows(rows), std::invalid_argument);
  rows[1].set(1);
  EXPECT_THROW(TermGraph::from_rows(rows), std::invalid_argument);
  EXPECT_THROW(TermGraph(3).add_edge(1, 1), std::invalid_argument);
}

TEST(complement, of_clique_is_edgeless) {
  TermGraph c = complement(complete_graph(4));
  EXPECT_EQ(c.size(), 4U);
  EXPECT_EQ(c.edge_count(), 0U);
}

TEST(complement, involution_and_pair_partition) {
  std::mt19937_64 rng(31);
  for (std::size_t n : {0U, 1U, 2U, 17U, 64U, 65U, 130U, 200U}) {
    for (double d : {0.1, 0.5, 0.9}) {
      TermGraph g = random_graph(n, d, rng);
      TermGraph c = complement(g);
      expect_consistent(c);
      EXPECT_EQ(complement(c), g);
      EXPECT_EQ(g.edge_count() + c.edge_count(), n * (n > 0 ? n - 1 : 0) / 2);
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          ASSERT_NE(g.adjacent(a, b), c.adjacent(a, b));
        }
      }
    }
  }
}

TEST(complement, model_complement_is_two_colorable) {
  TermGraph c = complement(build_qwc_graph(model_hamiltonian()));
  EXPECT_EQ(brute_force_chromatic_number(c), 2U);
}

TEST(subgraph_without, remove_everything_or_nothing) {
  TermGraph g = build_qwc_graph(model_hamiltonian());
  Bitset all = g.all_vertices();
  Subgraph none_left = subgraph_without(g, all);
  EXPECT_EQ(none_left.graph.size(), 0U);
  EXPECT_TRUE(none_left.original.empty());

  Subgraph same = subgraph_without(g, Bitset(g.size()));
  EXPECT_EQ(same.graph, g);
  EXPECT_EQ(same.original, (std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(subgraph_without, removing_z_family_leaves_triangle) {
  TermGraph g = build_qwc_graph(model_hamiltonian());
  std::vector<Vertex> z_family = {0, 1, 2, 3};
  Subgraph rest = subgraph_without(g, z_family);
  EXPECT_EQ(rest.original, (std::vector<Vertex>{4, 5, 6}));
  EXPECT_EQ(rest.graph, complete_graph(3));
}

TEST(subgraph_without, induced_edges_map_back) {
  std::mt19937_64 rng(37);
  TermGraph g = random_graph(40, 0.4, rng);
  Bitset removed(40);
  for (Vertex v : {1U, 5U, 6U, 20U, 39U}) {
    removed.set(v);
  }
  Subgraph sub = subgraph_without(g, removed);
  ASSERT_EQ(sub.graph.size(), 35U);
  expect_consistent(sub.graph);
  for (Vertex a = 0; a < sub.graph.size(); ++a) {
    EXPECT_FALSE(removed.test(sub.original[a]));
    for (Vertex b = 0; b < sub.graph.size(); ++b) {
      if (a != b) {
        EXPECT_EQ(sub.graph.adjacent(a, b), g.adjacent(sub.original[a], sub.original[b]));
      }
    }
  }
  EXPECT_THROW(subgraph_without(g, std::vector<Vertex>{40}), std::out_of_range);
}

TEST(write_adjacency, lists_neighbors_per_vertex) {
  std::ostringstream out;
  write_adjacency(out, build_qwc_graph(model_hamiltonian()));
  EXPECT_EQ(out.str(),
            "0: 1 2 3 4\n"
            "1: 0 2 3 4\n"
            "2: 0 1 3\n"
            "3: 0 1 2\n"
            "4: 0 1 5 6\n"
            "5: 4 6\n"
            "6: 4 5\n");
}
