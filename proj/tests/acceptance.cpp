// Prints one PASS/FAIL line per acceptance criterion; exit 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cantor/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  auto results = cantor::run_acceptance(seed, false);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s [%d] %s (%.3fs, limit %.0fs): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.limit_seconds, r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
