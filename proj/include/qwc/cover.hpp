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
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwc/graph.hpp"

namespace qwc {

/// Clique-cover heuristics, in reporting order.
enum class HeuristicId { GC, LF, SL, DSATUR, RLF, DB, COSINE, RAMSEY, BKT };

inline constexpr std::array<HeuristicId, 9> kAllHeuristics = {
    HeuristicId::GC,  HeuristicId::LF,     HeuristicId::SL,     HeuristicId::DSATUR, HeuristicId::RLF,
    HeuristicId::DB,  HeuristicId::COSINE, HeuristicId::RAMSEY, HeuristicId::BKT};

inline std::string_view heuristic_name(HeuristicId id) {
  switch (id) {
    case HeuristicId::GC:
      return "GC";
    case HeuristicId::LF:
      return "LF";
    case HeuristicId::SL:
      return "SL";
    case HeuristicId::DSATUR:
      return "DSATUR";
    case HeuristicId::RLF:
      return "RLF";
    case HeuristicId::DB:
      return "DB";
    case HeuristicId::COSINE:
      return "COSINE";
    case HeuristicId::RAMSEY:
      return "Ramsey";
    case HeuristicId::BKT:
      return "BKT";
  }
  return "?";
}

/// Case-insensitive lookup ("lf", "LF", "ramsey").
inline std::optional<HeuristicId> parse_heuristic(std::string_view name) {
  for (HeuristicId id : kAllHeuristics) {
    std::string_view ref = heuristic_name(id);
    if (ref.size() == name.size() &&
        std::equal(ref.begin(), ref.end(), name.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return id;
    }
  }
  return std::nullopt;
}

/// Vertex coloring with contiguous colors 0..n_colors-1.
struct Coloring {
  std::vector<std::size_t> color_of;
  std::size_t n_colors = 0;

  /// True iff no edge of `g` joins two vertices of the same color and the
  /// colors in use are exactly 0..n_colors-1.
  bool is_proper_on(const TermGraph &g) const {
    if (color_of.size() != g.size()) {
      return false;
    }
    std::vector<bool> used(n_colors, false);
    for (Vertex v = 0; v < g.size(); ++v) {
      if (color_of[v] >= n_colors) {
        return false;
      }
      used[color_of[v]] = true;
      bool clash = false;
      g.neighbors(v).for_each([&](std::size_t u) { clash = clash || color_of[u] == color_of[v]; });
      if (clash) {
        return false;
      }
    }
    return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
  }
};

/// Partition of term indices into mutually qubit-wise commuting groups.
struct CliqueCover {
  std::vector<std::vector<Vertex>> groups;
  /// Heuristic that produced the cover; empty for the exact oracle.
  std::optional<HeuristicId> provenance;

  std::size_t size() const { return groups.size(); }
};

/// True iff the groups are disjoint, cover 0..g.size()-1, and each is a clique.
inline bool is_valid_cover(const TermGraph &g, const CliqueCover &cover) {
  std::vector<bool> seen(g.size(), false);
  std::size_t total = 0;
  for (const auto &group : cover.groups) {
    if (group.empty()) {
      return false;
    }
    for (Vertex v : group) {
      if (v >= g.size() || seen[v]) {
        return false;
      }
      seen[v] = true;
      ++total;
    }
    if (!g.is_clique(group)) {
      return false;
    }
  }
  return total == g.size();
}

}  // namespace qwc
