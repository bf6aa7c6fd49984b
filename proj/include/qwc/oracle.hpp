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
#include <cstdint>
#include <string>
#include <vector>

#include "qwc/coloring.hpp"
#include "qwc/cover.hpp"
#include "qwc/errors.hpp"
#include "qwc/graph.hpp"

namespace qwc {

/// Largest graph the exact oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 16;

/**
 * Minimum coloring by dynamic programming over vertex subsets: each subset's
 * optimum removes one independent set containing its lowest vertex.
 * O(3^n) time, O(2^n) memory. Throws CapacityError above kOracleMaxVertices.
 */
inline Coloring exact_coloring(const TermGraph &g) {
  const std::size_t n = g.size();
  if (n > kOracleMaxVertices) {
    throw CapacityError("exact oracle is limited to " + std::to_string(kOracleMaxVertices) +
                        " vertices, got " + std::to_string(n));
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> adjacency(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    g.neighbors(v).for_each([&](std::size_t u) { adjacency[v] |= std::uint32_t{1} << u; });
  }
  std::vector<std::uint8_t> independent(std::size_t{full} + 1, 0);
  independent[0] = 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    std::uint32_t low = m & (~m + 1);
    std::uint32_t rest = m ^ low;
    auto v = static_cast<std::size_t>(__builtin_ctz(low));
    independent[m] = independent[rest] && (adjacency[v] & rest) == 0;
  }

  constexpr std::uint8_t kInf = 0xff;
  std::vector<std::uint8_t> best(std::size_t{full} + 1, kInf);
  std::vector<std::uint32_t> choice(std::size_t{full} + 1, 0);
  best[0] = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    std::uint32_t low = m & (~m + 1);
    std::uint32_t rest = m ^ low;
    std::uint32_t sub = rest;
    while (true) {
      std::uint32_t cls = sub | low;
      if (independent[cls] && best[m ^ cls] + 1 < best[m]) {
        best[m] = static_cast<std::uint8_t>(best[m ^ cls] + 1);
        choice[m] = cls;
      }
      if (sub == 0) {
        break;
      }
      sub = (sub - 1) & rest;
    }
  }

  Coloring c;
  c.color_of.assign(n, kUncolored);
  for (std::uint32_t m = full; m != 0; m ^= choice[m]) {
    for (Vertex v = 0; v < n; ++v) {
      if (choice[m] >> v & 1U) {
        c.color_of[v] = c.n_colors;
      }
    }
    ++c.n_colors;
  }
  return c;
}

/// Provably minimum clique cover: an exact coloring of the complement.
inline CliqueCover exact_mcc(const TermGraph &g) {
  return cover_from_coloring(g, exact_coloring(complement(g)));
}

}  // namespace qwc
