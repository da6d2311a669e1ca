// Acceptance suite: runs every verification criterion at its pinned scale
// and prints one line per criterion. Exit status is nonzero when any
// criterion fails. `--extended` adds the n = 3 X-generator family.

#include <cstring>
#include <iostream>

#include "verify/acceptance.hpp"

int main(int argc, char** argv) {
  wnlie::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) opt.extended = true;
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      opt.seed = static_cast<std::uint64_t>(std::stoull(argv[++i]));
  }

  std::vector<wnlie::CheckResult> results = wnlie::run_acceptance(opt);
  int failed = 0;
  for (const auto& r : results) {
    std::string tag = r.status == "pass" ? "PASS" : (r.status == "unstable" ? "UNSTABLE" : "FAIL");
    std::cout << "[" << tag << "] " << r.name;
    if (!r.witness.empty()) std::cout << " -- " << r.witness;
    std::cout << "\n";
    if (!r.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: all " : "acceptance: FAILURES ")
            << results.size() - static_cast<size_t>(failed) << "/" << results.size()
            << " criteria passed (seed " << opt.seed << (opt.extended ? ", extended" : "")
            << ")\n";
  return failed == 0 ? 0 : 1;
}
