#ifndef SP62V_CENSUS_HPP
#define SP62V_CENSUS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sp62v/bsgs.hpp"
#include "sp62v/cycle_type.hpp"
#include "sp62v/perm.hpp"

namespace sp62v {

// Flat storage for a full group enumeration (tens of MB at the sizes used
// here).
class ElementStore {
 public:
  explicit ElementStore(int degree) : degree_(degree) {}
  int degree() const { return degree_; }
  size_t size() const { return flat_.size() / static_cast<size_t>(degree_); }
  void push(const Perm& g);
  std::span<const uint8_t> view(size_t i) const;
  Perm get(size_t i) const;

 private:
  int degree_;
  std::vector<uint8_t> flat_;
};

struct ConjClass {
  Perm rep;  // lexicographically smallest member
  uint64_t size = 0;
  CycleType type;
  std::vector<uint32_t> members;  // element-store indices, sorted by image bytes
};

// Conjugacy classes of an enumerable group, computed by full enumeration,
// cycle-type bucketing, and conjugation-orbit closure within each bucket.
class GroupCensus {
 public:
  // gens must generate the same group the chain describes; they drive the
  // conjugation closure. Errors when the order exceeds the bound.
  static GroupCensus build(const StabilizerChain& chain, const std::vector<Perm>& gens,
                           uint64_t bound);

  uint64_t order() const { return order_; }
  int degree() const { return store_.degree(); }
  const std::vector<ConjClass>& classes() const { return classes_; }
  const ElementStore& store() const { return store_; }
  Perm member(size_t class_idx, size_t i) const;

  std::vector<size_t> classes_of_type(const CycleType& t) const;
  // Index of the class containing g (exact membership, not just type).
  size_t class_of(const Perm& g) const;
  bool same_class(const Perm& g, size_t class_idx) const;
  std::vector<CycleType> distinct_types() const;

  struct FixStats {
    uint64_t sum_fix = 0;
    uint64_t sum_fix2 = 0;
  };
  // Exact sums over the full enumeration.
  FixStats fix_statistics() const;

 private:
  uint64_t order_ = 0;
  ElementStore store_{0};
  std::vector<ConjClass> classes_;
};

// Standard generators of the alternating group on n points.
std::vector<Perm> alternating_generators(int n);

// Certifies that the minimal index of a proper subgroup of A_n is exactly n,
// for n in 5..7: exhaustive normal-subgroup search over class-union subsets
// (simplicity), the embedding bound |A_n| > d! for d < n, and the index-n
// point stabilizer. Returns n; errors outside the supported range or if any
// certificate step fails.
int min_faithful_degree_check(int n);

}  // namespace sp62v

#endif
