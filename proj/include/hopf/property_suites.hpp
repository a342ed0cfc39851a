// Built-in property suites run by `hopfcalc check`. Every check records a
// short value string so that a golden file can pin results down.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace hopf {

struct PropertyCheck {
  std::string label;  // unique within a run, e.g. "qgroups/stunted j=1 k=2 i=1"
  bool passed = false;
  std::string value;
  std::string detail;
};

struct SuiteResult {
  std::vector<PropertyCheck> checks;
  bool passed() const;
  std::size_t failures() const;
};

/// qgroups, steenrod, quadratic, witt.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Random inputs derive from `seed`.
/// Throws InputError for an unknown suite name.
SuiteResult run_property_suite(const std::string& name, unsigned seed = 1);

/// Compares recorded values with expected ones (label -> value). A mismatch
/// fails the check; labels in `golden` that were not run fail as well.
void apply_golden(SuiteResult& result, const std::map<std::string, std::string>& golden);

}  // namespace hopf
