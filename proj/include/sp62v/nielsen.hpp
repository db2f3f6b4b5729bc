#ifndef SP62V_NIELSEN_HPP
#define SP62V_NIELSEN_HPP

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "sp62v/census.hpp"
#include "sp62v/perm.hpp"
#include "sp62v/rational.hpp"

namespace sp62v {

// Quadruple of group elements with product one, tagged with the census class
// of each entry.
struct ClassTuple {
  std::array<Perm, 4> sigma;
  std::array<size_t, 4> cls;
};

// Hurwitz move Q_i (i in 1..3): (s_i, s_{i+1}) -> (s_i s_{i+1} s_i^-1, s_i);
// the inverse move is (s_i, s_{i+1}) -> (s_{i+1}, s_{i+1}^-1 s_i s_{i+1}).
// Preserves the product and swaps the class tags at i, i+1.
ClassTuple braid_move(const ClassTuple& t, int i, bool inverse = false);

// Tuple machinery bound to one enumerated group: counting, canonical forms
// modulo simultaneous conjugation, and braid-orbit closure.
class NielsenEngine {
 public:
  NielsenEngine(const GroupCensus& census, std::vector<Perm> group_gens);

  const GroupCensus& census() const { return census_; }
  uint64_t group_order() const { return order_; }

  // Validates product-one, membership of each entry in its tagged class, and
  // generation of the full group; throws otherwise.
  ClassTuple make_tuple(std::array<Perm, 4> sigma, std::array<size_t, 4> cls) const;

  bool generates_group(const Perm& a, const Perm& b, const Perm& c) const;
  // Order of {g : g commutes with every entry}; 1 for a generating tuple of a
  // group with trivial center.
  uint64_t tuple_centralizer_size(const ClassTuple& t) const;

  struct CountResult {
    uint64_t raw = 0;         // product-one tuples with the prescribed classes
    uint64_t generating = 0;  // those generating the full group
    Rational nielsen_length;  // generating * |C_first| / |G|
    std::vector<ClassTuple> generating_tuples;
  };
  // Counts tuples (s1, s2, s3, s4) with s1 fixed (the census representative
  // of cls[0], or the override), s2 and s3 ranging over their classes, and
  // s4 = (s1 s2 s3)^-1 required to land in cls[3].
  CountResult count_tuples(const std::array<size_t, 4>& cls,
                           const Perm* sigma1_override = nullptr) const;

  // Conjugates s1 to its class representative, then minimizes (s2, s3, s4)
  // lexicographically over the representative's centralizer. Identical on
  // conjugate tuples; throws on a non-generating tuple.
  ClassTuple canonicalize(const ClassTuple& t) const;

  // Closure of the given canonical representatives under Q1..Q3 and inverses
  // (canonicalizing every step); returns the partition of the inputs by
  // closure component. Tuples whose class sequence leaves the input pattern
  // are traversed but not reported.
  std::vector<std::vector<size_t>> braid_orbits(const std::vector<ClassTuple>& reps) const;

 private:
  const std::vector<Perm>& centralizer_of_rep(size_t cls) const;
  const std::unordered_map<Perm, Perm, PermHash>& conjugator_map(size_t cls) const;

  const GroupCensus& census_;
  std::vector<Perm> gens_;
  uint64_t order_;
  mutable std::map<size_t, std::vector<Perm>> centralizers_;
  mutable std::map<size_t, std::unordered_map<Perm, Perm, PermHash>> conj_maps_;
};

}  // namespace sp62v

#endif
