// Runs every verification case and prints one PASS/FAIL line per case.
#include <cstdio>

#include "psca/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& name : psca::verify_case_names()) {
    auto res = psca::run_case(name);
    if (res.pass) {
      std::printf("[PASS] %s\n", res.name.c_str());
    } else {
      ++failed;
      std::printf("[FAIL] %s: %s\n", res.name.c_str(), res.detail.c_str());
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
