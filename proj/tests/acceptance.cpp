#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include "trop/suite.hpp"

using namespace trop;

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
      seed = std::strtoull(argv[++i], nullptr, 10);
    else if (!std::strcmp(argv[i], "--verbose"))
      verbose = true;
  }
  const std::vector<KN> small{{2, 4}, {2, 5}, {3, 6}};
  std::vector<CheckResult (*)(std::uint64_t)> runs{
      [](std::uint64_t s) { return check_roundtrip({{2, 4}, {2, 5}, {3, 6}, {3, 7}}, 100, s, 60); },
      [](std::uint64_t) { return check_positroid_roundtrip({{2, 4}, {2, 5}, {3, 6}}); },
      [](std::uint64_t s) { return check_subdivision_equivalences({{2, 4}, {2, 5}, {3, 6}}, 200, s); },
      [](std::uint64_t s) { return check_fvector({{2, 4}, {2, 5}, {3, 6}}, 50, s); },
      [](std::uint64_t s) { return check_finest_equivalence({{2, 4}, {2, 5}, {3, 6}}, 50, 50, s); },
      [](std::uint64_t) { return check_positroid_recognition({{2, 4}, {2, 5}, {3, 6}}); },
      [](std::uint64_t) { return check_rank_vector_pipeline({{2, 4}, {2, 5}, {3, 6}}); },
      [](std::uint64_t) { return check_counterexample(300); },
      [](std::uint64_t) { return check_worked_values(); },
  };
  (void)small;
  int failed = 0;
  for (auto run : runs) {
    CheckResult r;
    try {
      r = run(seed);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = {{"exception", e.what()}};
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
    if (!r.passed || verbose) std::cout << "  " << r.detail.dump() << "\n";
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(runs.size()) - failed, runs.size());
  return failed ? 1 : 0;
}
