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

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "qwc/errors.hpp"
#include "qwc/pauli.hpp"

// Text format, one term per line:
//
//   # qubits: 4
//   0.5 [Z0 Z1]
//   (-0.25,0) [X2 X3]
//   1.0 []
//
// Lines starting with '#' are comments; the optional "# qubits: N" comment
// declares the register size. Qubit indices are zero-based.

namespace qwc {

/// Imaginary parts up to this magnitude are discarded; larger ones are an error.
inline constexpr double kImaginaryTolerance = 1e-10;

namespace detail {

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::size_t column() const { return pos_ + 1; }
  std::string_view rest() const { return text_.substr(pos_); }

  bool skip_space() {
    std::size_t start = pos_;
    while (!done() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
      ++pos_;
    }
    return pos_ != start;
  }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(line_, column(), what); }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  double number() {
    std::string_view r = rest();
    std::size_t skip = (!r.empty() && r.front() == '+') ? 1 : 0;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(r.data() + skip, r.data() + r.size(), value);
    if (ec != std::errc() || ptr == r.data() + skip) {
      fail("expected a number");
    }
    advance(static_cast<std::size_t>(ptr - r.data()));
    return value;
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::optional<std::size_t> parse_qubit_header(std::string_view comment, std::size_t line) {
  // comment starts after '#'
  std::size_t i = 0;
  while (i < comment.size() && (comment[i] == ' ' || comment[i] == '\t')) {
    ++i;
  }
  constexpr std::string_view key = "qubits:";
  if (comment.substr(i, key.size()) != key) {
    return std::nullopt;
  }
  i += key.size();
  while (i < comment.size() && (comment[i] == ' ' || comment[i] == '\t')) {
    ++i;
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(comment.data() + i, comment.data() + comment.size(), value);
  std::string_view trailing(ptr, static_cast<std::size_t>(comment.data() + comment.size() - ptr));
  if (ec != std::errc() || trailing.find_first_not_of(" \t") != std::string_view::npos) {
    // +2 accounts for the leading '#' and 1-based columns
    throw ParseError(line, i + 2, "malformed '# qubits: N' header");
  }
  return value;
}

struct ParsedTerm {
  HamiltonianTerm term;
  std::size_t line;
};

inline ParsedTerm parse_term_line(std::string_view text, std::size_t line) {
  LineCursor cur(text, line);
  cur.skip_space();

  double coefficient = 0.0;
  if (cur.peek() == '(') {
    cur.advance();
    cur.skip_space();
    coefficient = cur.number();
    cur.skip_space();
    cur.expect(',');
    cur.skip_space();
    std::size_t imag_column = cur.column();
    double imag = cur.number();
    cur.skip_space();
    cur.expect(')');
    if (!std::isfinite(imag) || std::abs(imag) > kImaginaryTolerance) {
      throw ParseError(line, imag_column,
                       "coefficient has a nonzero imaginary part; Hamiltonian terms must be real");
    }
  } else {
    coefficient = cur.number();
  }
  if (!std::isfinite(coefficient)) {
    cur.fail("coefficient is not finite");
  }
  if (!cur.skip_space()) {
    cur.fail("expected whitespace after coefficient");
  }
  cur.expect('[');

  std::vector<PauliFactor> factors;
  std::vector<std::size_t> columns;
  cur.skip_space();
  while (cur.peek() != ']') {
    if (cur.done()) {
      cur.fail("unterminated Pauli word, expected ']'");
    }
    std::size_t factor_column = cur.column();
    PauliAxis axis = PauliAxis::Identity;
    switch (cur.peek()) {
      case 'X':
        axis = PauliAxis::X;
        break;
      case 'Y':
        axis = PauliAxis::Y;
        break;
      case 'Z':
        axis = PauliAxis::Z;
        break;
      default:
        cur.fail(std::string("expected Pauli axis X, Y or Z, found '") + cur.peek() + "'");
    }
    cur.advance();
    if (cur.peek() == '-') {
      cur.fail("negative qubit index");
    }
    std::string_view r = cur.rest();
    unsigned long long index = 0;
    auto [ptr, ec] = std::from_chars(r.data(), r.data() + r.size(), index);
    if (ec == std::errc::result_out_of_range ||
        (ec == std::errc() && index > std::numeric_limits<QubitIndex>::max())) {
      cur.fail("qubit index out of range");
    }
    if (ec != std::errc() || ptr == r.data()) {
      cur.fail("expected qubit index after axis letter");
    }
    cur.advance(static_cast<std::size_t>(ptr - r.data()));
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (factors[k].qubit == index) {
        throw ParseError(line, factor_column,
                         "qubit " + std::to_string(index) + " already has an axis in this word");
      }
    }
    factors.push_back({static_cast<QubitIndex>(index), axis});
    columns.push_back(factor_column);
    bool spaced = cur.skip_space();
    if (!spaced && cur.peek() != ']') {
      cur.fail("expected space or ']' after factor");
    }
  }
  cur.advance();
  cur.skip_space();
  if (!cur.done()) {
    cur.fail("unexpected text after ']'");
  }
  return {{coefficient, PauliWord(std::move(factors))}, line};
}

}  // namespace detail

/// Parses the text format. Throws ParseError with the offending line and
/// column; an input without any term lines is reported as line 0.
inline Hamiltonian parse_hamiltonian(std::istream &in) {
  std::vector<detail::ParsedTerm> parsed;
  std::optional<std::size_t> declared;
  std::size_t declared_line = 0;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (!text.empty() && text.back() == '\r') {
      text.remove_suffix(1);
    }
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      continue;
    }
    if (text[first] == '#') {
      if (auto n = detail::parse_qubit_header(text.substr(first + 1), line)) {
        if (declared && *declared != *n) {
          throw ParseError(line, first + 1, "conflicting '# qubits' headers");
        }
        declared = n;
        declared_line = line;
      }
      continue;
    }
    parsed.push_back(detail::parse_term_line(text, line));
  }
  if (parsed.empty()) {
    throw ParseError(0, 0, "empty input: no Hamiltonian terms");
  }
  if (declared) {
    for (const auto &p : parsed) {
      if (auto q = p.term.word.max_qubit(); q && *q >= *declared) {
        throw ParseError(p.line, 1,
                         "qubit index " + std::to_string(*q) + " out of range for '# qubits: " +
                             std::to_string(*declared) + "' declared on line " +
                             std::to_string(declared_line));
      }
    }
  }
  std::vector<HamiltonianTerm> terms;
  terms.reserve(parsed.size());
  for (auto &p : parsed) {
    terms.push_back(std::move(p.term));
  }
  return Hamiltonian(terms, declared);
}

inline Hamiltonian parse_hamiltonian(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hamiltonian(in);
}

inline Hamiltonian load_hamiltonian(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open Hamiltonian file '" + path + "'");
  }
  return parse_hamiltonian(in);
}

/// Shortest decimal form that parses back to the same double.
inline std::string format_coefficient(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

/// Writes `h` in the text format, including a "# qubits" header, such that
/// parsing the output reproduces `h` exactly.
inline std::string format_hamiltonian(const Hamiltonian &h) {
  std::string out = "# qubits: " + std::to_string(h.n_qubits()) + "\n";
  for (const auto &t : h.terms()) {
    out += format_coefficient(t.coefficient);
    out += " [";
    out += t.word.to_string();
    out += "]\n";
  }
  return out;
}

}  // namespace qwc
