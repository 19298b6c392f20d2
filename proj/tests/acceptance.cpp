// Acceptance runner: one PASS/FAIL line per criterion, sub-checks indented.
// Usage: acceptance [--criterion N]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "lca/checks.hpp"

namespace {

// wall-clock budgets in seconds
const std::map<int, double> budgets{{1, 1}, {2, 10}, {4, 30}, {8, 10}, {9, 60}};

bool run(int n) {
  lca::RunConfig cfg;
  auto start = std::chrono::steady_clock::now();
  auto results = lca::run_criterion(n, cfg);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  std::string timing = std::to_string(secs).substr(0, 5) + "s";
  auto budget = budgets.find(n);
  bool in_time = budget == budgets.end() || secs <= budget->second;
  if (budget != budgets.end()) timing += " of " + std::to_string(static_cast<int>(budget->second)) + "s";
  ok = ok && in_time;
  std::printf("criterion %d (%s): %s [%s]\n", n, lca::criterion_title(n).c_str(), ok ? "PASS" : "FAIL",
              timing.c_str());
  for (const auto& r : results) {
    std::printf("    %s %s: %s\n", r.passed ? "ok  " : "FAIL", r.name.c_str(), r.detail.c_str());
  }
  if (!in_time) std::printf("    FAIL time budget exceeded\n");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    int n = std::atoi(argv[2]);
    if (n < 1 || n > lca::criterion_count) {
      std::fprintf(stderr, "criterion must be in 1..%d\n", lca::criterion_count);
      return 2;
    }
    return run(n) ? 0 : 1;
  }
  if (argc != 1) {
    std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
    return 2;
  }
  int failed = 0;
  for (int n = 1; n <= lca::criterion_count; ++n) failed += run(n) ? 0 : 1;
  std::printf("%d/%d criteria pass\n", lca::criterion_count - failed, lca::criterion_count);
  return failed == 0 ? 0 : 1;
}
