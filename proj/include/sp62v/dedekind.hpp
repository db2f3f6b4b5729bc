#ifndef SP62V_DEDEKIND_HPP
#define SP62V_DEDEKIND_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sp62v/cycle_type.hpp"
#include "sp62v/gfp.hpp"
#include "sp62v/poly.hpp"

namespace sp62v {

struct SampleRecord {
  uint64_t prime = 0;
  uint64_t t0 = 0;
  CycleType pattern;      // factor-degree multiset (empty unless accepted)
  bool accepted = false;  // good reduction and separable
};

struct StatSummary {
  size_t accepted = 0;
  double mean_fix = 0.0;       // average count of degree-1 factors
  double mean_fix2 = 0.0;      // average of (degree-1 count)^2
  uint64_t unknown_types = 0;  // accepted patterns outside the census list
  size_t distinct_types = 0;
};

// The smallest `count` primes > 100 passing the good-reduction filter for
// the family p - t q: p divides no coefficient denominator and the leading
// coefficient survives reduction.
std::vector<uint64_t> good_primes(const UniPoly& p, const UniPoly& q, size_t count);

// Frobenius sampling for the specialized family: per prime, per_prime values
// t0 from the seeded stream; each accepted sample factors p - t0 q mod p and
// records the factor-degree pattern. Inseparable or degenerate samples are
// recorded as rejected. Fully deterministic in (inputs, seed).
std::vector<SampleRecord> sample_frobenius(const UniPoly& p, const UniPoly& q,
                                           const std::vector<uint64_t>& primes, int per_prime,
                                           uint64_t seed);

// Variant taking a custom fiber builder (used by the planted negative
// controls); builder(pf, t0) returns the specialized polynomial mod p.
std::vector<SampleRecord> sample_frobenius_with(
    const std::function<GFPoly(const PrimeField&, uint64_t)>& builder,
    const std::vector<uint64_t>& primes, int per_prime, uint64_t seed);

// Aggregates accepted samples; errors below min_samples accepted records.
StatSummary statistics(const std::vector<SampleRecord>& records,
                       const std::vector<CycleType>& census_types, size_t min_samples = 200);

struct SquareDiscResult {
  std::vector<long> multiplicities;  // over Q
  bool leading_is_square = false;
  std::vector<long> multiplicities_mod_p;
  bool leading_is_residue_mod_p = false;
};

// Certifies delta_t is a square in Q(t) (even multiplicities, square leading
// coefficient) and that its reduction mod p is a square in F_p(t); errors
// with a diagnostic if either side fails.
SquareDiscResult square_disc_check(const UniPoly& delta_t, uint64_t p);

}  // namespace sp62v

#endif
