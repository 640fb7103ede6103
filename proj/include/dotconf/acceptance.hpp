#pragma once

#include <string>
#include <vector>

namespace dotconf {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // deterministic; no timings
};

std::vector<int> acceptance_ids();

/// Runs one acceptance check on self-generated inputs. Throws
/// std::invalid_argument for an unknown id.
CriterionResult run_criterion(int id, unsigned threads);

std::vector<CriterionResult> run_acceptance(unsigned threads);

/// One "PASS"/"FAIL" line per criterion, each followed by its details when
/// `verbose` is set.
std::string render_acceptance(const std::vector<CriterionResult>& results, bool verbose = true);

}  // namespace dotconf
