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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qwc {

/// Single-qubit Pauli operator. Any qubit not mentioned by a word is Identity.
enum class PauliAxis : std::uint8_t { Identity = 0, X = 1, Y = 2, Z = 3 };

inline char axis_letter(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
    case PauliAxis::Identity:
      break;
  }
  return 'I';
}

using QubitIndex = std::uint32_t;

struct PauliFactor {
  QubitIndex qubit;
  PauliAxis axis;

  friend bool operator==(const PauliFactor &, const PauliFactor &) = default;
  friend auto operator<=>(const PauliFactor &, const PauliFactor &) = default;
};

/**
 * A tensor product of single-qubit Pauli operators, stored sparsely as the
 * non-Identity factors sorted by qubit index. Qubits are numbered from zero;
 * the physics convention of numbering from one is not used anywhere in the
 * library (qubit 1 of a textbook example is qubit 0 here).
 */
class PauliWord {
 public:
  /// The identity word.
  PauliWord() = default;

  /// Builds a word from factors in any order. Identity factors are dropped.
  /// Throws std::invalid_argument if a qubit appears twice.
  explicit PauliWord(std::vector<PauliFactor> factors) : factors_(std::move(factors)) {
    std::erase_if(factors_, [](const PauliFactor &f) { return f.axis == PauliAxis::Identity; });
    std::sort(factors_.begin(), factors_.end(),
              [](const PauliFactor &a, const PauliFactor &b) { return a.qubit < b.qubit; });
    auto dup = std::adjacent_find(factors_.begin(), factors_.end(),
                                  [](const PauliFactor &a, const PauliFactor &b) {
                                    return a.qubit == b.qubit;
                                  });
    if (dup != factors_.end()) {
      throw std::invalid_argument("qubit " + std::to_string(dup->qubit) +
                                  " appears more than once in a Pauli word");
    }
  }

  PauliWord(std::initializer_list<PauliFactor> factors)
      : PauliWord(std::vector<PauliFactor>(factors)) {}

  std::span<const PauliFactor> factors() const { return factors_; }
  std::size_t weight() const { return factors_.size(); }
  bool is_identity() const { return factors_.empty(); }

  PauliAxis axis_at(QubitIndex qubit) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), qubit,
                               [](const PauliFactor &f, QubitIndex q) { return f.qubit < q; });
    if (it == factors_.end() || it->qubit != qubit) {
      return PauliAxis::Identity;
    }
    return it->axis;
  }

  std::optional<QubitIndex> max_qubit() const {
    if (factors_.empty()) {
      return std::nullopt;
    }
    return factors_.back().qubit;
  }

  /// Space-separated factors, e.g. "X0 Y3 Z12"; empty for the identity.
  std::string to_string() const {
    std::string out;
    for (const auto &f : factors_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += axis_letter(f.axis);
      out += std::to_string(f.qubit);
    }
    return out;
  }

  friend bool operator==(const PauliWord &, const PauliWord &) = default;
  friend auto operator<=>(const PauliWord &a, const PauliWord &b) {
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

 private:
  std::vector<PauliFactor> factors_;
};

namespace detail {

/// Calls fn(axis_a, axis_b) for every qubit where both words are non-Identity.
template <typename Fn>
void for_each_overlap(const PauliWord &a, const PauliWord &b, Fn &&fn) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].qubit < fb[j].qubit) {
      ++i;
    } else if (fb[j].qubit < fa[i].qubit) {
      ++j;
    } else {
      if (!fn(fa[i].axis, fb[j].axis)) {
        return;
      }
      ++i;
      ++j;
    }
  }
}

}  // namespace detail

/// True iff every single-qubit factor of `a` commutes with its counterpart in
/// `b`, i.e. wherever both words act non-trivially they use the same axis.
inline bool qubit_wise_commute(const PauliWord &a, const PauliWord &b) {
  bool ok = true;
  detail::for_each_overlap(a, b, [&](PauliAxis x, PauliAxis y) {
    ok = (x == y);
    return ok;
  });
  return ok;
}

/// Ordinary commutation: the words commute iff they anticommute on an even
/// number of qubits.
inline bool fully_commute(const PauliWord &a, const PauliWord &b) {
  std::size_t anticommuting = 0;
  detail::for_each_overlap(a, b, [&](PauliAxis x, PauliAxis y) {
    anticommuting += (x != y) ? 1 : 0;
    return true;
  });
  return anticommuting % 2 == 0;
}

/// Qubit-wise commutation implies commutation. Always true; exists so tests
/// can state the implication directly.
inline bool qwc_implies_commute_check(const PauliWord &a, const PauliWord &b) {
  return !qubit_wise_commute(a, b) || fully_commute(a, b);
}

struct PauliWordHash {
  std::size_t operator()(const PauliWord &w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto &f : w.factors()) {
      std::size_t v = (static_cast<std::size_t>(f.qubit) << 2) | static_cast<std::size_t>(f.axis);
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct HamiltonianTerm {
  double coefficient = 0.0;
  PauliWord word;

  friend bool operator==(const HamiltonianTerm &, const HamiltonianTerm &) = default;
};

/// Merged terms with |coefficient| below this are dropped.
inline constexpr double kPruneThreshold = 1e-12;

/**
 * A qubit Hamiltonian: a real linear combination of distinct Pauli words.
 *
 * Construction merges repeated words (summing coefficients, keeping the
 * position of the first occurrence) and then drops terms whose merged
 * coefficient is below kPruneThreshold in magnitude. Term order is otherwise
 * exactly the input order.
 */
class Hamiltonian {
 public:
  Hamiltonian() = default;

  /// `declared_qubits`, when given, must exceed every qubit index used;
  /// otherwise the qubit count is one more than the largest index seen.
  explicit Hamiltonian(const std::vector<HamiltonianTerm> &input,
                       std::optional<std::size_t> declared_qubits = std::nullopt) {
    std::size_t needed = 0;
    std::unordered_map<PauliWord, std::size_t, PauliWordHash> position;
    for (const auto &term : input) {
      if (!std::isfinite(term.coefficient)) {
        throw std::invalid_argument("non-finite coefficient for term [" +
                                    term.word.to_string() + "]");
      }
      if (auto q = term.word.max_qubit()) {
        needed = std::max<std::size_t>(needed, static_cast<std::size_t>(*q) + 1);
      }
      auto [it, inserted] = position.try_emplace(term.word, terms_.size());
      if (inserted) {
        terms_.push_back(term);
      } else {
        terms_[it->second].coefficient += term.coefficient;
      }
    }
    std::erase_if(terms_, [](const HamiltonianTerm &t) {
      return std::abs(t.coefficient) < kPruneThreshold;
    });
    if (declared_qubits) {
      if (needed > *declared_qubits) {
        throw std::invalid_argument("qubit index " + std::to_string(needed - 1) +
                                    " is out of range for " +
                                    std::to_string(*declared_qubits) + " declared qubits");
      }
      n_qubits_ = *declared_qubits;
    } else {
      n_qubits_ = needed;
    }
  }

  std::span<const HamiltonianTerm> terms() const { return terms_; }
  const HamiltonianTerm &term(std::size_t i) const { return terms_.at(i); }
  const PauliWord &word(std::size_t i) const { return terms_.at(i).word; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::size_t n_qubits() const { return n_qubits_; }

  friend bool operator==(const Hamiltonian &, const Hamiltonian &) = default;

 private:
  std::vector<HamiltonianTerm> terms_;
  std::size_t n_qubits_ = 0;
};

}  // namespace qwc
