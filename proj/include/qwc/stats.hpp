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
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qwc/cover.hpp"
#include "qwc/errors.hpp"
#include "qwc/pauli.hpp"

namespace qwc {

/// Measurement axis per qubit for one group; qubits no word touches are absent.
using MeasurementBasis = std::map<QubitIndex, PauliAxis>;

/// The shared single-qubit measurement axes of a group of terms. Throws
/// InvalidCover if two words want different axes on one qubit.
inline MeasurementBasis basis_of_group(const Hamiltonian &h, std::span<const Vertex> group) {
  MeasurementBasis basis;
  for (Vertex t : group) {
    for (const auto &f : h.word(t).factors()) {
      auto [it, inserted] = basis.emplace(f.qubit, f.axis);
      if (!inserted && it->second != f.axis) {
        throw InvalidCover("group is not qubit-wise commuting: qubit " + std::to_string(f.qubit) +
                           " needs both " + axis_letter(it->second) + " and " +
                           axis_letter(f.axis));
      }
    }
  }
  return basis;
}

struct CoverStats {
  std::size_t n_groups = 0;
  std::size_t max_size = 0;
  /// Population standard deviation (divides by n_groups).
  double size_std = 0.0;
  std::size_t total_terms = 0;
};

inline CoverStats compute_stats(const CliqueCover &cover) {
  CoverStats s;
  s.n_groups = cover.groups.size();
  for (const auto &g : cover.groups) {
    s.max_size = std::max(s.max_size, g.size());
    s.total_terms += g.size();
  }
  if (s.n_groups == 0) {
    return s;
  }
  const double mean = static_cast<double>(s.total_terms) / static_cast<double>(s.n_groups);
  double sq = 0.0;
  for (const auto &g : cover.groups) {
    double d = static_cast<double>(g.size()) - mean;
    sq += d * d;
  }
  s.size_std = std::sqrt(sq / static_cast<double>(s.n_groups));
  return s;
}

/// Checks a cover against the words themselves rather than any graph: every
/// term appears in exactly one group, and every pair inside a group commutes
/// qubit-wise. Throws InvalidCover describing the first violation.
inline void validate_cover(const Hamiltonian &h, const CliqueCover &cover) {
  std::vector<bool> seen(h.size(), false);
  std::size_t total = 0;
  for (std::size_t gi = 0; gi < cover.groups.size(); ++gi) {
    const auto &group = cover.groups[gi];
    if (group.empty()) {
      throw InvalidCover("group " + std::to_string(gi) + " is empty");
    }
    for (Vertex t : group) {
      if (t >= h.size()) {
        throw InvalidCover("group " + std::to_string(gi) + " names term " + std::to_string(t) +
                           " which does not exist");
      }
      if (seen[t]) {
        throw InvalidCover("term " + std::to_string(t) + " appears in more than one group");
      }
      seen[t] = true;
      ++total;
    }
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        if (!qubit_wise_commute(h.word(group[a]), h.word(group[b]))) {
          throw InvalidCover("group " + std::to_string(gi) + ": terms " + std::to_string(group[a]) +
                             " and " + std::to_string(group[b]) +
                             " do not commute qubit-wise");
        }
      }
    }
  }
  if (total != h.size()) {
    throw InvalidCover("cover leaves " + std::to_string(h.size() - total) + " terms ungrouped");
  }
}

}  // namespace qwc
