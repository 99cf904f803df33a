// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion.  Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>

#include "superpattern/verify.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  auto results = superpattern::run_acceptance();
  auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(clock::now() - start);
  int failures = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::printf("criterion %zu: %s -- %s", i + 1, r.pass ? "PASS" : "FAIL",
                r.name.c_str());
    if (!r.detail.empty()) std::printf(" (%s)", r.detail.c_str());
    std::printf("\n");
    if (!r.pass) ++failures;
  }
  std::printf("%d of %zu criteria failed (%llds total)\n", failures,
              results.size(), static_cast<long long>(elapsed.count()));
  return failures == 0 ? 0 : 1;
}
