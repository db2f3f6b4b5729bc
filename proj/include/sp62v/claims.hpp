#ifndef SP62V_CLAIMS_HPP
#define SP62V_CLAIMS_HPP

#include <string>
#include <vector>

namespace sp62v {

enum class ClaimCategory { Exact, Statistical, Cited };

// One machine-checkable claim: its id, the source-text anchor it tracks, and
// what the toolkit actually does about it.
struct ClaimInfo {
  const char* id;
  const char* stage;
  const char* anchor;  // short quote from the source text
  const char* check;   // what is computed
  ClaimCategory category;
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(const std::string& id);

// Human-readable description; throws with the list of valid ids on an
// unknown id.
std::string explain_claim(const std::string& id);

}  // namespace sp62v

#endif
