#include "sp62v/belyi.hpp"

#include <stdexcept>

#include "sp62v/gfp.hpp"

namespace sp62v {

int BranchPoint::defect() const
{
  return type.weight() - fiber_size;
}

int RamificationProfile::total_defect() const
{
  int d = 0;
  for (const auto& bp : branch_points)
    d += bp.defect();
  return d;
}

BranchPoint fiber_profile(const std::string& label, const UniPoly& f, int map_degree)
{
  if (f.is_zero())
    throw std::invalid_argument("fiber polynomial is zero over " + label);
  BranchPoint bp;
  bp.label = label;
  std::vector<int> lengths;
  auto sq = squarefree_decomposition(f);
  for (const auto& fac : sq.factors)
    for (int k = 0; k < fac.factor.degree(); ++k)
      lengths.push_back(fac.multiplicity);
  bp.fiber_size = 0;
  for (const auto& fac : sq.factors)
    bp.fiber_size += fac.factor.degree();
  const int finite_degree = f.degree();
  if (finite_degree > map_degree)
    throw std::invalid_argument("profile degree mismatch over " + label);
  if (finite_degree < map_degree) {
    lengths.push_back(map_degree - finite_degree);  // the fiber point at infinity
    bp.fiber_size += 1;
  }
  bp.type = CycleType::from_lengths(lengths);
  if (bp.type.weight() != map_degree)
    throw std::invalid_argument("profile degree mismatch over " + label);
  return bp;
}

RamificationProfile verify_belyi(const UniPoly& p, const UniPoly& q, const Rational& scale)
{
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("belyi map needs nonzero p and q");
  if (scale == 0)
    throw std::invalid_argument("belyi scale must be nonzero");
  if (poly_gcd(p, q).degree() != 0)
    throw std::invalid_argument("p, q share a factor");
  RamificationProfile profile;
  profile.map_degree = std::max(p.degree(), q.degree());
  profile.branch_points.push_back(fiber_profile("0", p, profile.map_degree));
  // scale*p/q = 1 on the zero set of p - (1/scale) q.
  UniPoly over_one = p - q.scaled(Rational(1) / scale);
  profile.branch_points.push_back(fiber_profile("1", over_one, profile.map_degree));
  profile.branch_points.push_back(fiber_profile("infinity", q, profile.map_degree));
  if (profile.total_defect() != 2 * profile.map_degree - 2)
    throw std::logic_error("Riemann-Hurwitz count failed for the belyi profile");
  return profile;
}

SquareRootCertificate verify_square_root_structure(const UniPoly& p, const UniPoly& q,
                                                   const Rational& scale)
{
  auto half = [](const UniPoly& f, const char* name) {
    auto sq = squarefree_decomposition(f);
    Rational content_root;
    if (!rational_is_square(sq.content, &content_root))
      throw std::runtime_error(std::string(name) + " has a non-square content");
    UniPoly root = UniPoly::constant(content_root);
    for (const auto& fac : sq.factors) {
      if (fac.multiplicity % 2 != 0)
        throw std::runtime_error(std::string(name) + " is not a perfect square");
      root = root * fac.factor.pow(fac.multiplicity / 2);
    }
    return root;
  };
  SquareRootCertificate cert;
  cert.sqrt_p = half(p, "p");
  cert.sqrt_q = half(q, "q");
  if (!rational_is_square(-scale, &cert.scale_root))
    throw std::runtime_error("-scale is not a rational square");
  if (!(cert.sqrt_p * cert.sqrt_p == p) || !(cert.sqrt_q * cert.sqrt_q == q))
    throw std::logic_error("square root certificate failed to reconstruct");
  return cert;
}

namespace {

// Profile of the fiber over t = r mod p from the squarefree structure of the
// specialized polynomial; exactness is certified by the caller through the
// discriminant-order defect.
BranchPoint fiber_profile_mod_p(const std::string& label, const GFPoly& f, int map_degree)
{
  BranchPoint bp;
  bp.label = label;
  if (f.degree() != map_degree)
    throw std::invalid_argument("profile degree mismatch over " + label);
  std::vector<int> lengths;
  for (const auto& fac : gf_squarefree(f))
    for (int k = 0; k < fac.factor.degree(); ++k)
      lengths.push_back(fac.multiplicity);
  bp.fiber_size = static_cast<int>(lengths.size());
  bp.type = CycleType::from_lengths(lengths);
  if (bp.type.weight() != map_degree)
    throw std::invalid_argument("profile degree mismatch over " + label);
  return bp;
}

}  // namespace

FamilyBranchData verify_family_branch_data(const BiPoly& P, const BiPoly& Q, const Rational& a0,
                                           const UniPoly& delta_at_a0)
{
  UniPoly p0 = P.specialize(a0);
  UniPoly q0 = Q.specialize(a0);
  if (p0.is_zero() || q0.is_zero() || p0.degree() <= q0.degree())
    throw std::invalid_argument("bad specialization for branch data");
  const int degree = p0.degree();

  FamilyBranchData out;
  out.profile.map_degree = degree;
  out.profile.branch_points.push_back(fiber_profile("t=0", p0, degree));

  // Non-zero finite branch points: the quadratic squarefree part of delta
  // away from t = 0.
  auto sq = squarefree_decomposition(delta_at_a0);
  UniPoly quad;
  long ord_at_quad = 0;
  long ord_at_zero = 0;
  for (const auto& fac : sq.factors) {
    UniPoly f = fac.factor;
    if (f == UniPoly::monomial(1)) {
      ord_at_zero = fac.multiplicity;
      continue;
    }
    if (f.coeff(0) == 0)
      throw std::invalid_argument("discriminant has an unexpected mixed factor");
    if (!quad.is_zero())
      throw std::invalid_argument("discriminant has more nonzero branch values than expected");
    quad = f;
    ord_at_quad = fac.multiplicity;
  }
  if (quad.degree() != 2)
    throw std::invalid_argument("expected exactly two branch points away from 0 and infinity");
  // ord_{t=0} delta equals the defect of the fiber over 0 in characteristic 0.
  if (out.profile.branch_points[0].defect() != ord_at_zero)
    throw std::runtime_error("profile mismatch at branch point t=0: defect " +
                             std::to_string(out.profile.branch_points[0].defect()) +
                             " differs from the discriminant order " + std::to_string(ord_at_zero));

  // Smallest good prime > 100 where the quadratic splits into two distinct
  // nonzero roots and the family reduces cleanly.
  uint64_t prime = 0;
  uint64_t roots[2] = {0, 0};
  for (uint64_t c = 101;; ++c) {
    if (!is_prime_u64(c))
      continue;
    PrimeField F(c);
    bool ok = true;
    GFPoly quad_p(F), p_red(F), q_red(F);
    try {
      quad_p = reduce_mod_p(quad, c);
      p_red = reduce_mod_p(p0, c);
      q_red = reduce_mod_p(q0, c);
    } catch (const std::invalid_argument&) {
      continue;  // p divides a denominator
    }
    if (quad_p.degree() != 2 || p_red.degree() != degree || q_red.degree() != q0.degree())
      continue;
    // split with two distinct nonzero roots
    uint64_t found[2] = {0, 0};
    int nfound = 0;
    for (uint64_t t = 1; t < c && nfound < 2; ++t) {
      if (quad_p.eval(t) == 0)
        found[nfound++] = t;
    }
    if (nfound != 2)
      ok = false;
    if (ok && quad_p.eval(0) == 0)
      ok = false;
    if (!ok)
      continue;
    prime = c;
    roots[0] = found[0];
    roots[1] = found[1];
    break;
  }
  out.split_prime = prime;

  PrimeField F(prime);
  GFPoly p_red = reduce_mod_p(p0, prime);
  GFPoly q_red = reduce_mod_p(q0, prime);
  for (int i = 0; i < 2; ++i) {
    out.r_mod_p[i] = roots[i];
    GFPoly fiber = p_red - q_red.scaled(roots[i]);
    std::string label = std::string("t=r") + std::to_string(i + 1);
    BranchPoint bp = fiber_profile_mod_p(label, fiber, degree);
    // In characteristic 0 the defect at r_i equals ord_{r_i} delta; a mod-p
    // degeneration could only merge fiber points and strictly raise the
    // defect, so defect equality certifies the profile exactly.
    if (bp.defect() != ord_at_quad)
      throw std::runtime_error("profile mismatch at branch point " + label +
                               ": mod-p defect " + std::to_string(bp.defect()) +
                               " differs from the discriminant order " +
                               std::to_string(ord_at_quad));
    out.profile.branch_points.push_back(std::move(bp));
  }

  out.profile.branch_points.push_back(fiber_profile("t=infinity", q0, degree));
  if (out.profile.total_defect() != 2 * degree - 2)
    throw std::logic_error("Riemann-Hurwitz count failed for the family profile");
  // The infinity defect balances the t-degree of the discriminant.
  if (delta_at_a0.degree() != 2 * degree - 2 - out.profile.branch_points.back().defect())
    throw std::runtime_error("profile mismatch at branch point t=infinity: discriminant degree " +
                             std::to_string(delta_at_a0.degree()) + " disagrees with the defect");
  return out;
}

}  // namespace sp62v
