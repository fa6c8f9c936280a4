// Acceptance gate: runs the thirteen numbered verification criteria and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "ringburst/verify.hpp"

int main() {
  int failures = 0;
  for (int index = 1; index <= 13; ++index) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
      const std::vector<ringburst::CheckResult> legs =
          ringburst::run_criterion(index);
      pass = !legs.empty();
      for (const ringburst::CheckResult& leg : legs) {
        pass = pass && leg.pass;
        if (!detail.empty()) detail += "; ";
        detail += leg.name + ": " + (leg.pass ? "ok" : "FAIL") +
                  (leg.detail.empty() ? "" : " (" + leg.detail + ")");
      }
    } catch (const std::exception& e) {
      pass = false;
      detail = std::string("exception: ") + e.what();
    }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::printf("[%s] criterion %02d (%llds) %s\n", pass ? "PASS" : "FAIL",
                index, static_cast<long long>(secs), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures == 0)
    std::printf("acceptance: all 13 criteria passed\n");
  else
    std::printf("acceptance: %d of 13 criteria failed\n", failures);
  return failures;
}
