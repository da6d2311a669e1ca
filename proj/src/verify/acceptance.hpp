#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kernel/scalar.hpp"

namespace wnlie {

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | unstable
  std::string witness;
  bool passed() const { return status == "pass"; }
};

struct AcceptanceOptions {
  std::uint64_t seed = 12345;
  bool extended = false;          // adds the n = 3 X family to criterion 3
  std::vector<Scalar> alpha;      // cuspidality positive check; empty = symbolic
};

/// Runs the fifteen acceptance criteria at their pinned scales. Every
/// tolerance is zero: all comparisons are exact. Failures carry a witness.
std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opt);

}  // namespace wnlie
