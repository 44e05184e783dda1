// Runs every acceptance criterion and prints one line per criterion.
// Exit status is nonzero if any criterion fails or overruns its time budget.

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "polarc/reproduce.hpp"

int main(int argc, char** argv) {
  polarc::ReproduceOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);

  try {
    const auto results = polarc::run_acceptance(opts);
    int failures = 0;
    for (const auto& r : results) {
      const char* verdict = r.ok() ? "PASS" : "FAIL";
      std::printf("%-4s %s  %s :: %s [%.2f s of %.0f s]\n", r.id.c_str(), verdict, r.title.c_str(),
                  r.detail.c_str(), r.seconds, r.limit_seconds);
      if (!r.ok()) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::printf("acceptance run aborted: %s\n", e.what());
    return EXIT_FAILURE;
  }
}
