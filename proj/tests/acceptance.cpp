#include <cstdio>

#include "symgame/acceptance.hpp"

int main() {
  int failed = 0;
  auto results = symgame::run_acceptance([&](const symgame::CriterionResult& r) {
    std::printf("criterion %2d [%s] %s - %s (%.1fs)\n", r.index,
                r.pass ? "pass" : "FAIL", r.name.c_str(), r.detail.c_str(),
                r.elapsed_seconds);
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  if (failed) {
    std::printf("%d of %zu criteria failed\n", failed, results.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", results.size());
  return 0;
}
