#ifndef SP62V_BSGS_HPP
#define SP62V_BSGS_HPP

#include <functional>
#include <vector>

#include "sp62v/perm.hpp"
#include "sp62v/rational.hpp"

namespace sp62v {

// Base and strong generating set via deterministic Schreier-Sims. Immutable
// once built.
class StabilizerChain {
 public:
  // Builds from a nonempty generator list of common degree.
  static StabilizerChain build(const std::vector<Perm>& gens);

  int degree() const { return degree_; }
  const Integer& order() const { return order_; }
  bool contains(const Perm& g) const;
  const std::vector<int>& base() const { return base_; }
  // Orbit of the first base point (the full orbit of the group if transitive).
  int first_orbit_size() const;

  // Visits every group element exactly once, in a fixed deterministic order.
  void for_each_element(const std::function<void(const Perm&)>& fn) const;
  // Materialized enumeration; errors with "group too large to enumerate" when
  // order exceeds the bound.
  std::vector<Perm> enumerate_elements(uint64_t bound) const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;                 // BFS order
    std::vector<int> slot;                  // point -> index into transversal, or -1
    std::vector<Perm> transversal;          // u with u[base_point] = orbit point
  };

  void recompute_orbit(size_t k);
  // Sift from the given level; returns the residue and the level it stopped at.
  std::pair<Perm, size_t> sift_from(const Perm& g, size_t k) const;
  void complete_level(size_t k);
  void enumerate_rec(size_t k, const Perm& right,
                     const std::function<void(const Perm&)>& fn) const;

  int degree_ = 0;
  std::vector<Level> levels_;
  std::vector<int> base_;
  Integer order_;
};

// Orbit partition of {0..n-1} under the generators; orbits sorted by their
// smallest point.
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree);
bool is_transitive(const std::vector<Perm>& gens, int degree);

// All minimal nontrivial block systems of a transitive group, as block-id
// vectors indexed by point (ids are the smallest point of each block).
// Errors on an intransitive action.
std::vector<std::vector<int>> minimal_blocks(const std::vector<Perm>& gens, int degree);

// Finest block system with a and b in a common block (Atkinson).
std::vector<int> finest_blocks_joining(const std::vector<Perm>& gens, int degree, int a, int b);

}  // namespace sp62v

#endif
