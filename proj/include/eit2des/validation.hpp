#pragma once

#include <string>
#include <vector>

#include "eit2des/params.hpp"

namespace eit2des::validation {

struct CheckResult {
  int criterion;        ///< 1-based id of the acceptance check it belongs to
  std::string name;
  std::string detail;   ///< measured values and thresholds, human-readable
  bool pass;
};

/// Oracle-vs-analytic cross checks, grouped by criterion. Each function
/// measures on the given parameter set and reports pass/fail at the pinned
/// tolerances; nothing is asserted here.
std::vector<CheckResult> check_eit_dip(const SystemParams& params);            // 1
std::vector<CheckResult> check_trough_splitting(const SystemParams& params);   // 2
std::vector<CheckResult> check_coherence_oracle(const SystemParams& params);   // 3
std::vector<CheckResult> check_population_oracle(const SystemParams& params);  // 4
std::vector<CheckResult> check_conservation(const SystemParams& params);       // 5
std::vector<CheckResult> check_steady_states(const SystemParams& params);      // 6
std::vector<CheckResult> check_peak_counting(const SystemParams& params);      // 7
std::vector<CheckResult> check_t2_behavior(const SystemParams& params);        // 8
std::vector<CheckResult> check_absorptive_structure(const SystemParams& params);  // 9

/// All of the above in order.
std::vector<CheckResult> run_all(const SystemParams& params);

}  // namespace eit2des::validation
