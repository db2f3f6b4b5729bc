#include "sp62v/dedekind.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sp62v {

std::vector<uint64_t> good_primes(const UniPoly& p, const UniPoly& q, size_t count)
{
  std::vector<uint64_t> out;
  for (uint64_t c = 101; out.size() < count; ++c) {
    if (!is_prime_u64(c))
      continue;
    try {
      GFPoly pr = reduce_mod_p(p, c);
      GFPoly qr = reduce_mod_p(q, c);
      if (pr.degree() != p.degree() || qr.degree() != q.degree())
        continue;  // leading coefficient dropped
    } catch (const std::invalid_argument&) {
      continue;  // divides a denominator
    }
    out.push_back(c);
  }
  return out;
}

std::vector<SampleRecord> sample_frobenius_with(
    const std::function<GFPoly(const PrimeField&, uint64_t)>& builder,
    const std::vector<uint64_t>& primes, int per_prime, uint64_t seed)
{
  if (primes.empty())
    throw std::invalid_argument("no good primes supplied");
  std::vector<SampleRecord> out;
  out.reserve(primes.size() * static_cast<size_t>(per_prime));
  for (uint64_t p : primes) {
    PrimeField F(p);
    SplitMix64 stream(seed ^ (p * 0x9e3779b97f4a7c15ull));
    for (int k = 0; k < per_prime; ++k) {
      SampleRecord rec;
      rec.prime = p;
      rec.t0 = stream.below(p);
      GFPoly fiber = builder(F, rec.t0);
      if (!fiber.is_zero() && fiber.degree() >= 1 &&
          gf_gcd(fiber, fiber.derivative()).degree() == 0) {
        // Per-sample factorization seed derived from (seed, p, t0) so records
        // are independent of the sampling order.
        uint64_t fseed = seed;
        fseed = (fseed ^ p) * 0xff51afd7ed558ccdull;
        fseed = (fseed ^ rec.t0) * 0xc4ceb9fe1a85ec53ull;
        rec.pattern = gf_degree_pattern(fiber, fseed);
        rec.accepted = true;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<SampleRecord> sample_frobenius(const UniPoly& p, const UniPoly& q,
                                           const std::vector<uint64_t>& primes, int per_prime,
                                           uint64_t seed)
{
  // Cache the reductions per prime; only the t0 shift varies inside a prime.
  uint64_t cached_p = 0;
  GFPoly pr, qr;
  return sample_frobenius_with(
      [&](const PrimeField& F, uint64_t t0) {
        if (F.p() != cached_p) {
          pr = reduce_mod_p(p, F.p());
          qr = reduce_mod_p(q, F.p());
          cached_p = F.p();
        }
        return pr - qr.scaled(t0);
      },
      primes, per_prime, seed);
}

StatSummary statistics(const std::vector<SampleRecord>& records,
                       const std::vector<CycleType>& census_types, size_t min_samples)
{
  StatSummary st;
  std::set<CycleType> known(census_types.begin(), census_types.end());
  std::set<CycleType> seen;
  double sum_fix = 0.0, sum_fix2 = 0.0;
  for (const auto& rec : records) {
    if (!rec.accepted)
      continue;
    ++st.accepted;
    const int fix = rec.pattern.count_of(1);
    sum_fix += fix;
    sum_fix2 += static_cast<double>(fix) * fix;
    if (known.find(rec.pattern) == known.end())
      ++st.unknown_types;
    seen.insert(rec.pattern);
  }
  if (st.accepted < min_samples)
    throw std::invalid_argument("insufficient samples: " + std::to_string(st.accepted) +
                                " accepted, need " + std::to_string(min_samples));
  st.mean_fix = sum_fix / static_cast<double>(st.accepted);
  st.mean_fix2 = sum_fix2 / static_cast<double>(st.accepted);
  st.distinct_types = seen.size();
  return st;
}

SquareDiscResult square_disc_check(const UniPoly& delta_t, uint64_t p)
{
  if (delta_t.is_zero())
    throw std::invalid_argument("zero discriminant");
  SquareDiscResult out;
  auto sq = squarefree_decomposition(delta_t);
  for (const auto& fac : sq.factors) {
    out.multiplicities.push_back(fac.multiplicity);
    if (fac.multiplicity % 2 != 0)
      throw std::runtime_error("discriminant is not a square in Q(t): factor of degree " +
                               std::to_string(fac.factor.degree()) + " has odd multiplicity " +
                               std::to_string(fac.multiplicity));
  }
  out.leading_is_square = rational_is_square(delta_t.leading());
  if (!out.leading_is_square)
    throw std::runtime_error("discriminant is not a square in Q(t): non-square leading coefficient");

  GFPoly red = reduce_mod_p(delta_t, p);
  if (red.is_zero() || red.degree() != delta_t.degree())
    throw std::runtime_error("bad reduction prime for the discriminant");
  for (const auto& fac : gf_factor(red, /*seed=*/p)) {
    out.multiplicities_mod_p.push_back(fac.multiplicity);
    if (fac.multiplicity % 2 != 0)
      throw std::runtime_error("discriminant reduction mod " + std::to_string(p) +
                               " is not a square: odd multiplicity " +
                               std::to_string(fac.multiplicity));
  }
  PrimeField F(p);
  out.leading_is_residue_mod_p = F.is_quadratic_residue(red.leading());
  if (!out.leading_is_residue_mod_p)
    throw std::runtime_error("discriminant reduction mod " + std::to_string(p) +
                             " is not a square: leading coefficient is a non-residue");
  return out;
}

}  // namespace sp62v
