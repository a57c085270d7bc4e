#pragma once
// Named verification cases tying the library against its golden data.

#include <string>
#include <vector>

namespace psca {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

const std::vector<std::string>& verify_case_names();
CheckResult run_case(const std::string& name);
std::vector<CheckResult> run_all_cases();

}  // namespace psca
