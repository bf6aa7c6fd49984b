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
#include <stdexcept>
#include <string>

namespace qwc {

/// Malformed Hamiltonian input. Line and column are 1-based; line 0 means
/// the input as a whole (e.g. it contained no terms).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string &what)
      : std::runtime_error(format(line, column, what)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string &what) {
    if (line == 0) {
      return "line 0: " + what;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A problem size exceeded a hard limit (graph capacity, oracle vertex cap).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The exact maximum-clique search expanded more nodes than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("maximum-clique search exceeded node budget of " +
                           std::to_string(budget)),
        budget_(budget) {}

  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

/// A set of terms claimed to be a group is not mutually qubit-wise commuting,
/// or a cover is not a partition. Always indicates a bug upstream.
class InvalidCover : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qwc
