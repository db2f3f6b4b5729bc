#ifndef SP62V_STAGES_HPP
#define SP62V_STAGES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sp62v/report.hpp"

namespace sp62v {

struct PipelineConfig {
  std::vector<std::string> stages{"all"};
  uint64_t seed = 42;
  std::vector<uint64_t> primes;  // empty: the 25 smallest good primes > 100
  int samples_per_prime = 40;
  std::vector<std::string> a0_values{"1", "2", "3"};
  double tol_fix = 0.15;
  double tol_fix2 = 0.35;
  int min_distinct_types = 15;
  std::string constants_path = "data/constants.json";
};

// Thrown for configuration problems (unknown stage names, bad values);
// mapped to exit code 2 by the CLI.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PipelineOutcome {
  VerificationReport report;
  std::string console;  // per-claim lines plus stage wall times
  int exit_code = 0;    // 0 verified, 1 some claim failed
};

// Runs the requested stages (plus prerequisites) in dependency order.
// Constants-file problems surface as UsageError.
PipelineOutcome run_pipeline(const PipelineConfig& config);

}  // namespace sp62v

#endif
