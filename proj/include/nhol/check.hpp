#pragma once

#include <string>
#include <vector>

namespace nhol {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Ordered list of named pass/fail results. Failures are entries, not exceptions.
struct CheckReport {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void append(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::vector<Check> failures() const {
    std::vector<Check> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c);
    return out;
  }
};

}  // namespace nhol
