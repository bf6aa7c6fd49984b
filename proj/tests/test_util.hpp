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

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the algorithms it is used to check.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qwc/qwc.hpp"

namespace qwc::testing {

/// The seven-term model Hamiltonian: a Z ladder plus an X/Y family.
inline Hamiltonian model_hamiltonian() {
  return parse_hamiltonian(
      "# qubits: 4\n"
      "1.0 [Z0]\n"
      "1.0 [Z0 Z1]\n"
      "1.0 [Z0 Z1 Z2]\n"
      "1.0 [Z0 Z1 Z2 Z3]\n"
      "1.0 [X2 X3]\n"
      "1.0 [Y0 X2 X3]\n"
      "1.0 [Y0 Y1 X2 X3]\n");
}

inline const std::vector<std::vector<Vertex>> &model_minimum_groups() {
  static const std::vector<std::vector<Vertex>> groups = {{0, 1, 2, 3}, {4, 5, 6}};
  return groups;
}

/// Groups as a sorted list of sorted groups, for set comparison.
inline std::vector<std::vector<Vertex>> canonical(std::vector<std::vector<Vertex>> groups) {
  for (auto &g : groups) {
    std::sort(g.begin(), g.end());
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

inline TermGraph graph_from_edges(std::size_t n,
                                  const std::vector<std::pair<Vertex, Vertex>> &edges) {
  TermGraph g(n);
  for (auto [a, b] : edges) {
    g.add_edge(a, b);
  }
  return g;
}

inline TermGraph random_graph(std::size_t n, double density, std::mt19937_64 &rng) {
  std::bernoulli_distribution edge(density);
  TermGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (edge(rng)) {
        g.add_edge(a, b);
      }
    }
  }
  return g;
}

inline TermGraph complete_graph(std::size_t n) {
  TermGraph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      g.add_edge(a, b);
    }
  }
  return g;
}

inline TermGraph cycle_graph(std::size_t n) {
  TermGraph g(n);
  for (Vertex v = 0; v < n; ++v) {
    g.add_edge(v, (v + 1) % n);
  }
  return g;
}

/**
 * A Hamiltonian whose QWC graph is exactly `g`: every non-edge (a, b) gets
 * its own qubit with X on a and Z on b, and every vertex gets one private
 * qubit carrying Z so that all words are distinct.
 */
inline Hamiltonian realize_graph(const TermGraph &g) {
  const std::size_t n = g.size();
  std::vector<std::vector<PauliFactor>> factors(n);
  QubitIndex next = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) {
        factors[a].push_back({next, PauliAxis::X});
        factors[b].push_back({next, PauliAxis::Z});
        ++next;
      }
    }
  }
  std::vector<HamiltonianTerm> terms;
  for (Vertex v = 0; v < n; ++v) {
    factors[v].push_back({next++, PauliAxis::Z});
    terms.push_back({1.0 + static_cast<double>(v), PauliWord(factors[v])});
  }
  return Hamiltonian(terms);
}

inline PauliWord random_word(std::size_t max_qubits, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> axis(0, 3);
  std::vector<PauliFactor> f;
  for (QubitIndex q = 0; q < max_qubits; ++q) {
    int a = axis(rng);
    if (a != 0) {
      f.push_back({q, static_cast<PauliAxis>(a)});
    }
  }
  return PauliWord(f);
}

// ---------------------------------------------------------------------------
// Dense-matrix Pauli algebra.

using Matrix = std::vector<std::complex<double>>;  // row-major, square

inline Matrix single_qubit_matrix(PauliAxis a) {
  using C = std::complex<double>;
  switch (a) {
    case PauliAxis::X:
      return {C(0), C(1), C(1), C(0)};
    case PauliAxis::Y:
      return {C(0), C(0, -1), C(0, 1), C(0)};
    case PauliAxis::Z:
      return {C(1), C(0), C(0), C(-1)};
    case PauliAxis::Identity:
      break;
  }
  return {C(1), C(0), C(0), C(1)};
}

inline Matrix kron(const Matrix &a, std::size_t da, const Matrix &b, std::size_t db) {
  Matrix out(da * db * da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          out[(i * db + k) * (da * db) + (j * db + l)] = a[i * da + j] * b[k * db + l];
        }
      }
    }
  }
  return out;
}

inline Matrix dense_word(const PauliWord &w, std::size_t n_qubits) {
  Matrix m = {1.0};
  std::size_t dim = 1;
  for (QubitIndex q = 0; q < n_qubits; ++q) {
    m = kron(m, dim, single_qubit_matrix(w.axis_at(q)), 2);
    dim *= 2;
  }
  return m;
}

inline Matrix matmul(const Matrix &a, const Matrix &b, std::size_t d) {
  Matrix out(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        out[i * d + j] += a[i * d + k] * b[k * d + j];
      }
    }
  }
  return out;
}

/// ||AB - BA|| == 0 for the explicit matrices.
inline bool matrices_commute(const PauliWord &a, const PauliWord &b, std::size_t n_qubits) {
  const std::size_t d = std::size_t{1} << n_qubits;
  Matrix ma = dense_word(a, n_qubits);
  Matrix mb = dense_word(b, n_qubits);
  Matrix ab = matmul(ma, mb, d);
  Matrix ba = matmul(mb, ma, d);
  double norm = 0.0;
  for (std::size_t i = 0; i < d * d; ++i) {
    norm += std::norm(ab[i] - ba[i]);
  }
  return norm < 1e-18;
}

// ---------------------------------------------------------------------------
// Brute-force graph oracles.

/// Largest clique by enumerating all vertex subsets (n <= 20).
inline std::size_t brute_force_clique_number(const TermGraph &g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    std::size_t k = static_cast<std::size_t>(std::popcount(m));
    if (k <= best) {
      continue;
    }
    bool ok = true;
    for (Vertex a = 0; a < n && ok; ++a) {
      for (Vertex b = a + 1; b < n && ok; ++b) {
        if ((m >> a & 1U) && (m >> b & 1U) && !g.adjacent(a, b)) {
          ok = false;
        }
      }
    }
    if (ok) {
      best = k;
    }
  }
  return best;
}

/// Smallest k admitting a proper k-coloring, by plain backtracking.
inline std::size_t brute_force_chromatic_number(const TermGraph &g) {
  const std::size_t n = g.size();
  if (n == 0) {
    return 0;
  }
  std::vector<std::size_t> color(n, 0);
  std::function<bool(Vertex, std::size_t)> place = [&](Vertex v, std::size_t k) {
    if (v == n) {
      return true;
    }
    for (std::size_t c = 0; c < k; ++c) {
      bool ok = true;
      for (Vertex u = 0; u < v; ++u) {
        if (g.adjacent(u, v) && color[u] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        color[v] = c;
        if (place(v + 1, k)) {
          return true;
        }
      }
    }
    return false;
  };
  for (std::size_t k = 1;; ++k) {
    if (place(0, k)) {
      return k;
    }
  }
}

/// Pairwise check of a cover straight from the words.
inline bool groups_are_qwc(const Hamiltonian &h, const std::vector<std::vector<Vertex>> &groups) {
  for (const auto &g : groups) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        if (!qubit_wise_commute(h.word(g[a]), h.word(g[b]))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qwc::testing
