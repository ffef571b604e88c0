#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rootfp {

// Exhaustive structural checks.  Every check is a finite computation over the
// relevant root systems; `pass` means zero counterexamples were found.
// `notes` carries the counts that certify the check was not vacuous, plus any
// counterexamples on failure.  Output is deterministic.
struct CheckResult {
  std::string id;
  bool pass = true;
  std::vector<std::string> notes;
};

struct Check {
  std::string id;
  std::string summary;
  std::function<CheckResult()> run;
};

const std::vector<Check>& all_checks();
const Check* find_check(const std::string& id);

std::string report_line(const CheckResult& r);

}  // namespace rootfp
