#pragma once

// The acceptance criteria as runnable checks, shared by the CLI and ctest.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nonrep {

struct CriterionOutcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  std::string id;  // "AC1" .. "AC9"
  std::string title;
  std::vector<std::string> tags;
  std::function<CriterionOutcome()> run;

  /// `filter` matches the id (case-insensitive) or any tag.
  bool matches(const std::string& filter) const;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

const std::vector<Criterion>& acceptance_criteria();

/// Runs the criteria matching every filter (all of them when `only` is empty),
/// reporting each result as it completes.
std::vector<CriterionResult> run_suite(const std::vector<std::string>& only,
                                       const std::function<void(const CriterionResult&)>& on_done = {});

std::string format_result_line(const CriterionResult& r);
void print_report(std::ostream& os, const std::vector<CriterionResult>& results);
nlohmann::json report_json(const std::vector<CriterionResult>& results);

}  // namespace nonrep
