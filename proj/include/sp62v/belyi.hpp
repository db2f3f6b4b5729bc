#ifndef SP62V_BELYI_HPP
#define SP62V_BELYI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sp62v/cycle_type.hpp"
#include "sp62v/poly.hpp"

namespace sp62v {

// Ramification data of one branch point: multiplicities over the fiber as a
// (multiplicity, count) multiset, including the point at infinity when the
// finite fiber polynomial drops below the map degree.
struct BranchPoint {
  std::string label;
  CycleType type;
  int fiber_size = 0;
  int defect() const;  // map degree enters through type weight
};

struct RamificationProfile {
  int map_degree = 0;
  std::vector<BranchPoint> branch_points;
  int total_defect() const;
};

// Multiplicity profile of the fiber cut out by f, padded with an
// infinity part of multiplicity (map_degree - deg f) when positive. Errors
// with "profile degree mismatch" if multiplicities cannot sum to the degree.
BranchPoint fiber_profile(const std::string& label, const UniPoly& f, int map_degree);

// Belyi ramification of scale * p / q over {0, 1, infinity}: squarefree
// decompositions of p, of q (plus the infinity part), and of
// p - (1/scale) q. Checks coprimality and Riemann-Hurwitz for genus 0.
RamificationProfile verify_belyi(const UniPoly& p, const UniPoly& q, const Rational& scale);

struct SquareRootCertificate {
  UniPoly sqrt_p;       // sqrt_p^2 = p
  UniPoly sqrt_q;       // sqrt_q^2 = q
  Rational scale_root;  // scale = -(scale_root)^2
};

// Certifies p, q are perfect squares in Q[X] and -scale is a rational
// square; errors otherwise.
SquareRootCertificate verify_square_root_structure(const UniPoly& p, const UniPoly& q,
                                                   const Rational& scale);

struct FamilyBranchData {
  RamificationProfile profile;  // over t in {0, infinity, r1, r2}
  uint64_t split_prime = 0;     // prime used for the r_i fibers
  uint64_t r_mod_p[2] = {0, 0};
};

// Branch data of p(a0, X) - t q(a0, X) with respect to t. The fibers over 0
// and infinity are decomposed exactly over Q; the fibers over the two roots
// r_i of the quadratic Delta-factor are decomposed modulo the smallest good
// prime > 100 where that quadratic splits, and certified exact through the
// discriminant-order defect count (any mod-p degeneration would strictly
// exceed it). delta_at_a0 must be the already verified discriminant.
FamilyBranchData verify_family_branch_data(const BiPoly& P, const BiPoly& Q, const Rational& a0,
                                           const UniPoly& delta_at_a0);

}  // namespace sp62v

#endif
