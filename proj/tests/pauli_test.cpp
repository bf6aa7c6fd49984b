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

#include "gtest/gtest.h"
#include "qwc/pauli.hpp"
#include "test_util.hpp"

using namespace qwc;
using qwc::testing::matrices_commute;
using qwc::testing::random_word;

namespace {

// Textbook qubit 1 is qubit 0 here.
const PauliWord kX1{{0, PauliAxis::X}};
const PauliWord kY2{{1, PauliAxis::Y}};
const PauliWord kZ1{{0, PauliAxis::Z}};
const PauliWord kX1X2{{0, PauliAxis::X}, {1, PauliAxis::X}};
const PauliWord kY1Y2{{0, PauliAxis::Y}, {1, PauliAxis::Y}};

}  // namespace

TEST(pauli_word, stores_only_non_identity_sorted) {
  PauliWord w{{3, PauliAxis::Z}, {1, PauliAxis::Identity}, {0, PauliAxis::X}};
  ASSERT_EQ(w.weight(), 2U);
  EXPECT_EQ(w.factors()[0].qubit, 0U);
  EXPECT_EQ(w.factors()[1].qubit, 3U);
  EXPECT_EQ(w.axis_at(1), PauliAxis::Identity);
  EXPECT_EQ(w.axis_at(3), PauliAxis::Z);
  EXPECT_EQ(w.axis_at(100), PauliAxis::Identity);
  EXPECT_EQ(w.to_string(), "X0 Z3");
  EXPECT_TRUE(PauliWord().is_identity());
  EXPECT_EQ(PauliWord().to_string(), "");
}

TEST(pauli_word, rejects_repeated_qubit) {
  EXPECT_THROW((PauliWord{{2, PauliAxis::X}, {2, PauliAxis::Z}}), std::invalid_argument);
}

TEST(qubit_wise_commute, disjoint_supports_commute) {
  EXPECT_TRUE(qubit_wise_commute(kX1, kY2));
}

TEST(qubit_wise_commute, xx_and_yy_do_not) {
  EXPECT_FALSE(qubit_wise_commute(kX1X2, kY1Y2));
}

TEST(qubit_wise_commute, identity_commutes_with_everything) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(qubit_wise_commute(PauliWord(), random_word(6, rng)));
  }
}

TEST(qubit_wise_commute, reflexive_and_symmetric) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    PauliWord a = random_word(6, rng);
    PauliWord b = random_word(6, rng);
    EXPECT_TRUE(qubit_wise_commute(a, a));
    EXPECT_EQ(qubit_wise_commute(a, b), qubit_wise_commute(b, a));
  }
}

TEST(qubit_wise_commute, not_transitive) {
  EXPECT_TRUE(qubit_wise_commute(kX1, kY2));
  EXPECT_TRUE(qubit_wise_commute(kY2, kZ1));
  EXPECT_FALSE(qubit_wise_commute(kX1, kZ1));
}

TEST(fully_commute, examples) {
  EXPECT_TRUE(fully_commute(kX1X2, kY1Y2));
  EXPECT_FALSE(fully_commute(kX1, kZ1));
  PauliWord xz{{0, PauliAxis::X}, {1, PauliAxis::Z}};
  PauliWord zx{{0, PauliAxis::Z}, {1, PauliAxis::X}};
  ASSERT_TRUE(matrices_commute(xz, zx, 2));
  EXPECT_TRUE(fully_commute(xz, zx));
}

TEST(fully_commute, matches_dense_matrix_commutator) {
  // Every pair of words on 2 qubits, then random pairs on up to 4.
  std::vector<PauliWord> all2;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      all2.push_back(PauliWord{{0, static_cast<PauliAxis>(a)}, {1, static_cast<PauliAxis>(b)}});
    }
  }
  for (const auto &a : all2) {
    for (const auto &b : all2) {
      EXPECT_EQ(fully_commute(a, b), matrices_commute(a, b, 2)) << a.to_string() << " / " << b.to_string();
    }
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    PauliWord a = random_word(4, rng);
    PauliWord b = random_word(4, rng);
    EXPECT_EQ(fully_commute(a, b), matrices_commute(a, b, 4)) << a.to_string() << " / " << b.to_string();
  }
}

TEST(qwc_implies_commute_check, examples) {
  PauliWord z1z2{{0, PauliAxis::Z}, {1, PauliAxis::Z}};
  EXPECT_TRUE(qwc_implies_commute_check(kZ1, z1z2));
  EXPECT_TRUE(qwc_implies_commute_check(kX1, kZ1));
}

TEST(qwc_implies_commute_check, holds_on_random_pairs_and_matrix_oracle_agrees) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<std::size_t> nq(1, 6);
    std::size_t q = nq(rng);
    PauliWord a = random_word(q, rng);
    PauliWord b = random_word(q, rng);
    ASSERT_TRUE(qwc_implies_commute_check(a, b));
    if (q <= 4 && qubit_wise_commute(a, b)) {
      EXPECT_TRUE(matrices_commute(a, b, q));
    }
  }
  // The converse fails.
  EXPECT_TRUE(fully_commute(kX1X2, kY1Y2));
  EXPECT_FALSE(qubit_wise_commute(kX1X2, kY1Y2));
}

TEST(hamiltonian, merges_duplicates_and_prunes) {
  PauliWord x0{{0, PauliAxis::X}};
  PauliWord z1{{1, PauliAxis::Z}};
  Hamiltonian h({{0.5, x0}, {2.0, z1}, {0.5, x0}, {1e-13, PauliWord()}});
  ASSERT_EQ(h.size(), 2U);
  EXPECT_EQ(h.word(0), x0);
  EXPECT_DOUBLE_EQ(h.term(0).coefficient, 1.0);
  EXPECT_EQ(h.word(1), z1);
  EXPECT_EQ(h.n_qubits(), 2U);
}

TEST(hamiltonian, cancelling_terms_are_dropped) {
  PauliWord x0{{0, PauliAxis::X}};
  Hamiltonian h({{0.5, x0}, {-0.5, x0}, {1.0, PauliWord()}});
  ASSERT_EQ(h.size(), 1U);
  EXPECT_TRUE(h.word(0).is_identity());
}

TEST(hamiltonian, declared_qubits_bound_indices) {
  PauliWord x3{{3, PauliAxis::X}};
  EXPECT_EQ(Hamiltonian({{1.0, x3}}, 6).n_qubits(), 6U);
  EXPECT_THROW(Hamiltonian({{1.0, x3}}, 3), std::invalid_argument);
}
