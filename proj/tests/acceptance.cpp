// Acceptance suite: runs every certification criterion and prints one
// pass/fail line per criterion.  Exit code 0 iff everything passed.

#include <chrono>
#include <cstdio>

#include "limitrep/certify.hpp"

int main() {
  bool all = true;
  for (int id = 1; id <= limitrep::certify::criterion_count; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    limitrep::certify::CriterionResult r;
    try {
      r = limitrep::certify::run_criterion(id);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = std::string("exception: ") + e.what();
      r.pass = false;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("[%s] criterion %2d (%5lld ms): %s\n", r.pass ? "PASS" : "FAIL", id,
                static_cast<long long>(ms), r.title.c_str());
    if (!r.pass) {
      std::printf("        details: %s\n", r.details.c_str());
      all = false;
    }
  }
  std::printf("%s\n", all ? "acceptance: ALL CRITERIA PASSED" : "acceptance: FAILURES PRESENT");
  return all ? 0 : 1;
}
