#pragma once

#include <string>
#include <vector>

namespace theta_forge {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

constexpr int kCriterionCount = 11;

/// Runs one desk-scale acceptance criterion (1 .. kCriterionCount); a
/// criterion also fails when it exceeds its time limit.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

/// "PASS  4  E8 from the tetracode  (0.12 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace theta_forge
