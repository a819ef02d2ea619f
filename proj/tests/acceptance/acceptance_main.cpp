// Acceptance gate: runs the twelve criterion batteries and prints exactly
// one PASS/FAIL line per criterion.  All comparisons inside the batteries
// are exact; there are no tolerances.  Exits nonzero if anything fails.

#include "lagr/suite.hpp"

#include <cstdio>
#include <string>

int main() {
  bool all = true;
  auto results = lagr::run_suite();
  for (const auto& r : results) {
    bool pass = r.report.all_pass();
    all = all && pass;
    std::printf("criterion %02d %-58s %s (%zu checks)\n", r.number, r.title.c_str(),
                pass ? "PASS" : "FAIL", r.report.items.size());
    if (!pass) {
      for (const auto& it : r.report.items)
        if (!it.pass)
          std::printf("    failed: %s%s%s\n", it.id.c_str(),
                      it.detail.empty() ? "" : " — ", it.detail.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASSED (12/12)" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
