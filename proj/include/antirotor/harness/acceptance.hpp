#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace antirotor::harness {

struct CaseResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0 when the case has no time budget
  std::string detail;
};

struct SelftestCase {
  std::string name;
  // Names accepted by --only: the case name, its group, and for acceptance
  // criteria the criterion number.
  std::vector<std::string> tags;
  int criterion = 0;  // 1..9 for acceptance criteria, 0 otherwise
  double limit_seconds = 0.0;
  std::function<bool(std::string& detail)> run;
};

std::vector<SelftestCase> selftest_cases();
std::vector<SelftestCase> acceptance_cases();

// Runs the cases whose tags contain `only` (all when empty), in order.
std::vector<CaseResult> run_cases(const std::vector<SelftestCase>& cases, const std::string& only,
                                  std::ostream* progress = nullptr);
std::string scoreboard_line(const CaseResult& r);

}  // namespace antirotor::harness
