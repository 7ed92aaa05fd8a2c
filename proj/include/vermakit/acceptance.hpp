#pragma once

#include <string>
#include <vector>

namespace vermakit {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 means no limit

  bool passed() const;
};

/// Directory holding the hand-transcribed diagram goldens of the source tree.
std::string default_golden_dir();

/// Runs the acceptance criteria (all of them when `only` is empty). Missing
/// or malformed goldens fail the criterion that reads them.
std::vector<CriterionResult> run_acceptance(const std::string& golden_dir, const std::vector<int>& only = {});

bool all_passed(const std::vector<CriterionResult>& results);
std::string acceptance_text(const std::vector<CriterionResult>& results);
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace vermakit
