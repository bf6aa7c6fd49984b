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

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "qwc/qwc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct InputParseError {
  std::string path;
  std::string message;
};

qwc::Hamiltonian load(const std::string &path) {
  try {
    return qwc::load_hamiltonian(path);
  } catch (const qwc::ParseError &e) {
    throw InputParseError{path, e.what()};
  }
}

struct CommonFlags {
  std::string algorithm;
  std::string format = "text";
  std::string output;
  bool validate = false;
  bool timing = false;
  bool seedless = false;
  std::size_t bkt_budget = qwc::kDefaultBktBudget;
  std::size_t bkt_max_vertices = 5000;
};

void add_common(CLI::App *cmd, CommonFlags &flags, const std::string &default_algorithm) {
  flags.algorithm = default_algorithm;
  cmd->add_option("--algorithm", flags.algorithm,
                  "gc|lf|sl|dsatur|rlf|db|cosine|ramsey|bkt|all")
      ->check([](const std::string &s) -> std::string {
        if (s == "all" || qwc::parse_heuristic(s)) {
          return {};
        }
        return "unknown heuristic '" + s + "'";
      })
      ->capture_default_str();
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", flags.output, "Write the report here instead of stdout");
  cmd->add_flag("--validate", flags.validate,
                "Re-check every group pairwise from the Pauli words");
  cmd->add_flag("--timing", flags.timing, "Report wall-clock time per heuristic");
  cmd->add_option("--bkt-budget", flags.bkt_budget, "Node budget for exact maximum-clique search")
      ->capture_default_str();
  cmd->add_option("--bkt-max-vertices", flags.bkt_max_vertices,
                  "With --algorithm all, skip BKT above this many terms")
      ->capture_default_str();
  cmd->add_flag("--seedless", flags.seedless, "Accepted for compatibility; there is no randomness");
}

std::vector<qwc::HeuristicId> selected(const CommonFlags &flags) {
  if (flags.algorithm == "all") {
    return {qwc::kAllHeuristics.begin(), qwc::kAllHeuristics.end()};
  }
  return {*qwc::parse_heuristic(flags.algorithm)};
}

qwc::RunOptions options_of(const CommonFlags &flags) {
  qwc::RunOptions opt;
  opt.bkt_budget = flags.bkt_budget;
  opt.bkt_max_vertices = flags.bkt_max_vertices;
  opt.timing = flags.timing;
  opt.validate_words = flags.validate;
  return opt;
}

int emit(const std::string &text, const std::string &path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

int cmd_run(const std::string &input, const CommonFlags &flags) {
  qwc::GroupingProblem problem(load(input));
  auto heuristics = selected(flags);
  auto report = qwc::run_report(input, problem, heuristics, options_of(flags),
                                flags.algorithm == "all");
  std::ostringstream text;
  if (flags.format == "json") {
    text << qwc::report_to_json(problem.hamiltonian, report).dump(2) << '\n';
  } else {
    qwc::write_text_report(text, problem.hamiltonian, report);
  }
  int rc = emit(text.str(), flags.output);
  if (rc != kExitOk) {
    return rc;
  }
  for (const auto &r : report.results) {
    if (r.status == qwc::ResultStatus::BudgetExceeded) {
      std::cerr << "error: " << qwc::heuristic_name(r.heuristic) << ": " << r.message << '\n';
    }
  }
  return report.all_ok() ? kExitOk : kExitBudget;
}

int cmd_compare(const std::vector<std::string> &inputs, const CommonFlags &flags) {
  auto heuristics = selected(flags);
  std::vector<qwc::CompareRow> rows;
  bool ok = true;
  for (const auto &input : inputs) {
    qwc::GroupingProblem problem(load(input));
    auto report = qwc::run_report(input, problem, heuristics, options_of(flags),
                                  flags.algorithm == "all");
    ok = ok && report.all_ok();
    rows.push_back(qwc::compare_row(report));
  }
  std::ostringstream text;
  if (flags.format == "json") {
    text << qwc::compare_to_json(heuristics, rows).dump(2) << '\n';
  } else {
    qwc::write_compare_table(text, heuristics, rows);
  }
  int rc = emit(text.str(), flags.output);
  if (rc != kExitOk) {
    return rc;
  }
  return ok ? kExitOk : kExitBudget;
}

int cmd_graph(const std::string &input, bool complemented, const std::string &output) {
  qwc::GroupingProblem problem(load(input));
  std::ostringstream text;
  qwc::write_adjacency(text, complemented ? problem.complement_graph : problem.graph);
  return emit(text.str(), output);
}

}  // namespace

int main(int argc, char **argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string_view(argv[i]).starts_with("--seedless=")) {
      std::cerr << "error: --seedless takes no value\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Group Hamiltonian terms into qubit-wise commuting sets"};
  app.require_subcommand(1);

  std::string run_input;
  CommonFlags run_flags;
  auto *run = app.add_subcommand("run", "Partition one Hamiltonian and report the groups");
  run->add_option("--input", run_input, "Hamiltonian file")->required();
  add_common(run, run_flags, "lf");

  std::vector<std::string> compare_inputs;
  CommonFlags compare_flags;
  auto *compare = app.add_subcommand("compare", "Group counts per heuristic for several inputs");
  compare->add_option("--input", compare_inputs, "Hamiltonian file (repeatable)")->required();
  add_common(compare, compare_flags, "all");

  std::string graph_input;
  std::string graph_output;
  bool graph_complement = false;
  auto *graph = app.add_subcommand("graph", "Dump the QWC graph as adjacency lists");
  graph->add_option("--input", graph_input, "Hamiltonian file")->required();
  graph->add_option("--output", graph_output, "Write here instead of stdout");
  graph->add_flag("--complement", graph_complement, "Dump the complement graph instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      return cmd_run(run_input, run_flags);
    }
    if (compare->parsed()) {
      return cmd_compare(compare_inputs, compare_flags);
    }
    return cmd_graph(graph_input, graph_complement, graph_output);
  } catch (const InputParseError &e) {
    std::cerr << "parse error: " << e.path << ": " << e.message << '\n';
    return kExitParse;
  } catch (const qwc::CapacityError &e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
