#ifndef SP62V_REPORT_HPP
#define SP62V_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "sp62v/claims.hpp"

namespace sp62v {

enum class ClaimStatus { VerifiedExact, VerifiedStatistical, CitedTheorem, Failed };
const char* status_str(ClaimStatus s);

struct ClaimResult {
  std::string id;
  ClaimStatus status;
  nlohmann::ordered_json witness;
  std::string diagnostic;  // nonempty only when failed
};

// Deterministic, diff-stable verification record: fixed key order, rationals
// as strings, newline-terminated text. Wall times are deliberately not part
// of it (they go to the console summary) so identical runs produce identical
// bytes.
class VerificationReport {
 public:
  explicit VerificationReport(nlohmann::ordered_json config);

  void add_claim(ClaimResult result);  // stage comes from the registry
  bool all_ok() const { return failed_ == 0; }
  size_t failed_count() const { return failed_; }

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
  // One line per claim for the console.
  std::string summary() const;

 private:
  nlohmann::ordered_json config_;
  std::vector<std::string> stage_order_;
  std::vector<ClaimResult> claims_;
  size_t failed_ = 0;
};

}  // namespace sp62v

#endif
