#pragma once

#include <string>
#include <vector>

namespace ruledmmp {

enum class CheckStatus { Pass, Fail, Vacuous, Flag };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // required for Fail: the class, fiber label, or point id involved
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  // Flags and vacuous entries do not fail a report.
  bool overall() const {
    for (const CheckResult& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }

  void add(std::string name, CheckStatus status, std::string witness = "") {
    checks.push_back({std::move(name), status, std::move(witness)});
  }
  void merge(const VerificationReport& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
};

}  // namespace ruledmmp
