#pragma once

#include <string>
#include <vector>

namespace ainfty {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;  // failing tuples, or notes on pass
  std::string detail;
};

/// Outcome of one verifier run; failures are data.
struct Report {
  std::string check;
  std::vector<CheckResult> results;

  bool passed() const;
  void add(CheckResult r) { results.push_back(std::move(r)); }
  /// {"check", "status", "witnesses", "results": [...]}
  std::string to_json() const;
  /// One line per result: "PASS name" / "FAIL name: witness".
  std::string to_text() const;
};

}  // namespace ainfty
