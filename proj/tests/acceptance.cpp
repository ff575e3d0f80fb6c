// Acceptance gate: runs every verification check at full scale and prints one
// status line per criterion.  Exits nonzero if any check fails.

#include <cstdio>
#include <string>

#include "eqgeo/verify.hpp"

int main() {
  eqgeo::VerifyOptions opts;  // max_n = 12, fixed seed
  bool failed = false;
  int index = 0;
  for (const auto& check : eqgeo::verification_checks()) {
    eqgeo::CheckResult r = eqgeo::run_check(check, opts);
    const char* word = r.status == eqgeo::CheckStatus::pass   ? "PASS"
                       : r.status == eqgeo::CheckStatus::fail ? "FAIL"
                                                              : "SKIP";
    if (r.status == eqgeo::CheckStatus::fail) failed = true;
    std::printf("criterion %2d  %-17s %s  %s\n", ++index, r.tag.c_str(), word, r.detail.c_str());
    std::fflush(stdout);
  }
  if (failed) {
    std::printf("acceptance: FAILED\n");
    return 1;
  }
  std::printf("acceptance: all criteria satisfied\n");
  return 0;
}
