#ifndef SP62V_CYCLE_TYPE_HPP
#define SP62V_CYCLE_TYPE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sp62v {

// Multiset of part lengths with counts: cycle lengths of a permutation or
// irreducible-factor degrees of a separable polynomial. Parts are kept
// sorted ascending by length.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<std::pair<int, int>> parts);

  static CycleType from_lengths(const std::vector<int>& lengths);
  // Accepts the printed shape, e.g. "1^6.2.4^7" or "(3^12)".
  static CycleType parse(const std::string& text);

  const std::vector<std::pair<int, int>>& parts() const { return parts_; }
  int weight() const;
  // Count of parts of the given length (0 if absent).
  int count_of(int length) const;

  // Printed shape: parts ascending, "len^count" with "^count" dropped when
  // the count is 1, joined by dots.
  std::string str() const;

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<std::pair<int, int>> parts_;
};

}  // namespace sp62v

#endif
