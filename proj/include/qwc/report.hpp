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

#include <chrono>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwc/clique.hpp"
#include "qwc/cover.hpp"
#include "qwc/errors.hpp"
#include "qwc/hamiltonian_io.hpp"
#include "qwc/solve.hpp"
#include "qwc/stats.hpp"

namespace qwc {

struct RunOptions {
  std::size_t bkt_budget = kDefaultBktBudget;
  /// BKT is skipped for larger graphs unless it was requested by name.
  std::size_t bkt_max_vertices = 5000;
  /// Record wall-clock time per heuristic. Off by default so that reports
  /// are byte-for-byte reproducible.
  bool timing = false;
  /// Additionally re-check every group pairwise from the Pauli words.
  bool validate_words = false;
};

enum class ResultStatus { Ok, Skipped, BudgetExceeded };

struct HeuristicResult {
  HeuristicId heuristic = HeuristicId::GC;
  ResultStatus status = ResultStatus::Ok;
  std::string message;
  CliqueCover cover;
  CoverStats stats;
  std::vector<MeasurementBasis> bases;
  std::optional<double> wall_ms;
};

struct RunReport {
  std::string input;
  std::size_t total_terms = 0;
  std::size_t n_qubits = 0;
  std::vector<HeuristicResult> results;

  bool all_ok() const {
    for (const auto &r : results) {
      if (r.status == ResultStatus::BudgetExceeded) {
        return false;
      }
    }
    return true;
  }
};

/// Runs one heuristic and checks its cover before returning it. The cover is
/// checked against the graph and every group must yield a measurement basis.
inline HeuristicResult run_heuristic(const GroupingProblem &problem, HeuristicId id,
                                     const RunOptions &options) {
  HeuristicResult r;
  r.heuristic = id;
  auto start = std::chrono::steady_clock::now();
  try {
    r.cover = solve(problem, id, options.bkt_budget);
  } catch (const BudgetExceeded &e) {
    r.status = ResultStatus::BudgetExceeded;
    r.message = e.what();
    return r;
  }
  auto stop = std::chrono::steady_clock::now();
  if (options.timing) {
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  }
  if (!is_valid_cover(problem.graph, r.cover)) {
    throw InvalidCover(std::string(heuristic_name(id)) + " produced an invalid clique cover");
  }
  if (options.validate_words) {
    validate_cover(problem.hamiltonian, r.cover);
  }
  r.stats = compute_stats(r.cover);
  r.bases.reserve(r.cover.size());
  for (const auto &group : r.cover.groups) {
    r.bases.push_back(basis_of_group(problem.hamiltonian, group));
  }
  return r;
}

/// Runs `heuristics` in the given order over one shared graph. When
/// `skip_large_bkt` is set, BKT is skipped on graphs above
/// options.bkt_max_vertices.
inline RunReport run_report(const std::string &input, const GroupingProblem &problem,
                            std::span<const HeuristicId> heuristics, const RunOptions &options,
                            bool skip_large_bkt) {
  RunReport report;
  report.input = input;
  report.total_terms = problem.hamiltonian.size();
  report.n_qubits = problem.hamiltonian.n_qubits();
  for (HeuristicId id : heuristics) {
    if (skip_large_bkt && id == HeuristicId::BKT && problem.graph.size() > options.bkt_max_vertices) {
      HeuristicResult r;
      r.heuristic = id;
      r.status = ResultStatus::Skipped;
      r.message = "skipped: " + std::to_string(problem.graph.size()) + " vertices exceeds " +
                  std::to_string(options.bkt_max_vertices);
      report.results.push_back(std::move(r));
      continue;
    }
    report.results.push_back(run_heuristic(problem, id, options));
  }
  return report;
}

namespace detail {

inline std::string basis_string(const MeasurementBasis &basis) {
  std::string out;
  for (const auto &[q, axis] : basis) {
    if (!out.empty()) {
      out += ' ';
    }
    out += axis_letter(axis);
    out += std::to_string(q);
  }
  return out;
}

inline std::string status_name(ResultStatus s) {
  switch (s) {
    case ResultStatus::Ok:
      return "ok";
    case ResultStatus::Skipped:
      return "skipped";
    case ResultStatus::BudgetExceeded:
      return "budget_exceeded";
  }
  return "?";
}

}  // namespace detail

using ordered_json = nlohmann::ordered_json;

/// JSON record for one heuristic. Keys: total_terms, heuristic, n_groups,
/// max_size, size_std, wall_ms (null unless timing was requested) and
/// groups[{terms, words, basis}]. Failed or skipped runs carry "status" and
/// "error" instead of statistics.
inline ordered_json result_to_json(const Hamiltonian &h, const HeuristicResult &r) {
  ordered_json j;
  j["total_terms"] = h.size();
  j["heuristic"] = std::string(heuristic_name(r.heuristic));
  if (r.status != ResultStatus::Ok) {
    j["status"] = detail::status_name(r.status);
    j["error"] = r.message;
    return j;
  }
  j["n_groups"] = r.stats.n_groups;
  j["max_size"] = r.stats.max_size;
  j["size_std"] = r.stats.size_std;
  j["wall_ms"] = r.wall_ms ? ordered_json(*r.wall_ms) : ordered_json(nullptr);
  ordered_json groups = ordered_json::array();
  for (std::size_t g = 0; g < r.cover.size(); ++g) {
    ordered_json group;
    group["terms"] = r.cover.groups[g];
    ordered_json words = ordered_json::array();
    for (Vertex t : r.cover.groups[g]) {
      words.push_back(h.word(t).to_string());
    }
    group["words"] = std::move(words);
    ordered_json basis = ordered_json::object();
    for (const auto &[q, axis] : r.bases[g]) {
      basis[std::to_string(q)] = std::string(1, axis_letter(axis));
    }
    group["basis"] = std::move(basis);
    groups.push_back(std::move(group));
  }
  j["groups"] = std::move(groups);
  return j;
}

inline ordered_json report_to_json(const Hamiltonian &h, const RunReport &report) {
  ordered_json j;
  j["input"] = report.input;
  j["total_terms"] = report.total_terms;
  j["n_qubits"] = report.n_qubits;
  ordered_json results = ordered_json::array();
  for (const auto &r : report.results) {
    results.push_back(result_to_json(h, r));
  }
  j["results"] = std::move(results);
  return j;
}

/// Reads back a record produced by result_to_json (successful runs only).
/// Bases are restored from the "basis" objects; the words are not needed.
inline HeuristicResult result_from_json(const ordered_json &j) {
  HeuristicResult r;
  auto id = parse_heuristic(j.at("heuristic").get<std::string>());
  if (!id) {
    throw std::invalid_argument("unknown heuristic in report: " + j.at("heuristic").dump());
  }
  r.heuristic = *id;
  r.cover.provenance = *id;
  r.stats.n_groups = j.at("n_groups").get<std::size_t>();
  r.stats.max_size = j.at("max_size").get<std::size_t>();
  r.stats.size_std = j.at("size_std").get<double>();
  r.stats.total_terms = j.at("total_terms").get<std::size_t>();
  if (!j.at("wall_ms").is_null()) {
    r.wall_ms = j.at("wall_ms").get<double>();
  }
  for (const auto &group : j.at("groups")) {
    r.cover.groups.push_back(group.at("terms").get<std::vector<Vertex>>());
    MeasurementBasis basis;
    for (const auto &[key, value] : group.at("basis").items()) {
      const std::string letter = value.get<std::string>();
      PauliAxis axis = letter == "X" ? PauliAxis::X : letter == "Y" ? PauliAxis::Y : PauliAxis::Z;
      if (letter != "X" && letter != "Y" && letter != "Z") {
        throw std::invalid_argument("bad basis axis '" + letter + "'");
      }
      basis.emplace(static_cast<QubitIndex>(std::stoul(key)), axis);
    }
    r.bases.push_back(std::move(basis));
  }
  if (r.cover.size() != r.stats.n_groups) {
    throw std::invalid_argument("n_groups does not match the group listing");
  }
  return r;
}

inline void write_text_report(std::ostream &out, const Hamiltonian &h, const RunReport &report) {
  out << "input: " << report.input << '\n';
  out << "total_terms: " << report.total_terms << '\n';
  out << "qubits: " << report.n_qubits << '\n';
  for (const auto &r : report.results) {
    out << '\n' << '[' << heuristic_name(r.heuristic) << "] ";
    if (r.status != ResultStatus::Ok) {
      out << detail::status_name(r.status) << ": " << r.message << '\n';
      continue;
    }
    out << "groups=" << r.stats.n_groups << " max_size=" << r.stats.max_size
        << " size_std=" << format_coefficient(r.stats.size_std);
    if (r.wall_ms) {
      std::ostringstream ms;
      ms.precision(3);
      ms << std::fixed << *r.wall_ms;
      out << " wall_ms=" << ms.str();
    }
    out << '\n';
    for (std::size_t g = 0; g < r.cover.size(); ++g) {
      out << "  group " << g << " (" << r.cover.groups[g].size()
          << " terms) basis: " << detail::basis_string(r.bases[g]) << '\n';
      for (Vertex t : r.cover.groups[g]) {
        out << "    " << t << "  " << format_coefficient(h.term(t).coefficient) << " ["
            << h.word(t).to_string() << "]\n";
      }
    }
  }
}

/// One row of the heuristic comparison grid: group count per heuristic, or
/// nothing when the heuristic did not finish.
struct CompareRow {
  std::string input;
  std::size_t total_terms = 0;
  std::vector<std::optional<std::size_t>> counts;
};

inline CompareRow compare_row(const RunReport &report) {
  CompareRow row;
  row.input = report.input;
  row.total_terms = report.total_terms;
  for (const auto &r : report.results) {
    row.counts.push_back(r.status == ResultStatus::Ok ? std::optional(r.stats.n_groups)
                                                      : std::nullopt);
  }
  return row;
}

/// "Total | GC LF ..." header, then "<input>\t<total> | <counts>" per row;
/// unfinished heuristics print as "-".
inline void write_compare_table(std::ostream &out, std::span<const HeuristicId> heuristics,
                                std::span<const CompareRow> rows) {
  out << "input\tTotal |";
  for (HeuristicId id : heuristics) {
    out << ' ' << heuristic_name(id);
  }
  out << '\n';
  for (const auto &row : rows) {
    out << row.input << '\t' << row.total_terms << " |";
    for (const auto &c : row.counts) {
      out << ' ';
      if (c) {
        out << *c;
      } else {
        out << '-';
      }
    }
    out << '\n';
  }
}

inline ordered_json compare_to_json(std::span<const HeuristicId> heuristics,
                                    std::span<const CompareRow> rows) {
  ordered_json j = ordered_json::array();
  for (const auto &row : rows) {
    ordered_json entry;
    entry["input"] = row.input;
    entry["total_terms"] = row.total_terms;
    ordered_json counts = ordered_json::object();
    for (std::size_t k = 0; k < heuristics.size(); ++k) {
      counts[std::string(heuristic_name(heuristics[k]))] =
          row.counts[k] ? ordered_json(*row.counts[k]) : ordered_json(nullptr);
    }
    entry["n_groups"] = std::move(counts);
    j.push_back(std::move(entry));
  }
  return j;
}

}  // namespace qwc
