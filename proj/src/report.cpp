#include "sp62v/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sp62v {

using nlohmann::ordered_json;

const char* status_str(ClaimStatus s)
{
  switch (s) {
    case ClaimStatus::VerifiedExact:
      return "verified-exact";
    case ClaimStatus::VerifiedStatistical:
      return "verified-statistical";
    case ClaimStatus::CitedTheorem:
      return "cited-theorem";
    case ClaimStatus::Failed:
      return "failed";
  }
  return "unknown";
}

VerificationReport::VerificationReport(ordered_json config) : config_(std::move(config)) {}

void VerificationReport::add_claim(ClaimResult result)
{
  const ClaimInfo* info = find_claim(result.id);
  if (!info)
    throw std::logic_error("claim id not registered: " + result.id);
  if (result.status == ClaimStatus::Failed)
    ++failed_;
  if (std::find(stage_order_.begin(), stage_order_.end(), info->stage) == stage_order_.end())
    stage_order_.push_back(info->stage);
  claims_.push_back(std::move(result));
}

ordered_json VerificationReport::to_json() const
{
  ordered_json j;
  j["config"] = config_;
  ordered_json stages;
  for (const std::string& stage : stage_order_) {
    ordered_json arr = ordered_json::array();
    for (const auto& claim : claims_) {
      const ClaimInfo* info = find_claim(claim.id);
      if (stage != info->stage)
        continue;
      ordered_json cj;
      cj["claim"] = claim.id;
      cj["anchor"] = info->anchor;
      cj["status"] = status_str(claim.status);
      if (!claim.witness.is_null())
        cj["witness"] = claim.witness;
      if (!claim.diagnostic.empty())
        cj["diagnostic"] = claim.diagnostic;
      arr.push_back(std::move(cj));
    }
    stages[stage] = std::move(arr);
  }
  j["stages"] = std::move(stages);
  j["overall"] = failed_ == 0 ? "verified" : "failed";
  return j;
}

std::string VerificationReport::to_text() const
{
  return to_json().dump(2) + "\n";
}

std::string VerificationReport::summary() const
{
  std::ostringstream os;
  for (const auto& claim : claims_) {
    os << (claim.status == ClaimStatus::Failed ? "FAIL " : "ok   ") << claim.id << " ["
       << status_str(claim.status) << "]";
    if (!claim.diagnostic.empty())
      os << " -- " << claim.diagnostic;
    os << "\n";
  }
  os << (failed_ == 0 ? "overall: verified" : "overall: FAILED") << "\n";
  return os.str();
}

}  // namespace sp62v
