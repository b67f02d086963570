#ifndef PDC_SELFCHECK_HPP
#define PDC_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pdc {

// One cross-oracle consistency suite outcome, as run by `pdc selfcheck`.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst-case error or the first failure found
};

// Runs the full cross-validation battery (closed forms vs Wick engine,
// threshold consistency, Fock oracle, lossy cross-oracle, Monte Carlo,
// physicality along trajectories). Designed to finish in a few seconds.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed = 1);

}  // namespace pdc

#endif  // PDC_SELFCHECK_HPP
