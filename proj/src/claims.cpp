#include "sp62v/claims.hpp"

#include <sstream>
#include <stdexcept>

namespace sp62v {

const std::vector<ClaimInfo>& claim_registry()
{
  static const std::vector<ClaimInfo> registry = {
      {"triple.x-type", "triple",
       "The corresponding ramification has to be of type (6^12), (1^24.2^24) and (2^6. 4. 8^7)",
       "cycle type of the printed x equals 6^12", ClaimCategory::Exact},
      {"triple.z-type", "triple",
       "The corresponding ramification has to be of type (6^12), (1^24.2^24) and (2^6. 4. 8^7)",
       "cycle type of the printed z equals 2^6.4.8^7", ClaimCategory::Exact},
      {"triple.y-type", "triple", "contains exactly one triple (x,y,z) ... which satisfies xyz = 1",
       "with y := x^-1 z^-1 (so xyz = 1), the cycle type of y equals 1^24.2^24",
       ClaimCategory::Exact},
      {"triple.transitive", "triple", "its (transitive) monodromy group",
       "<x, z> is transitive on the 72 points", ClaimCategory::Exact},
      {"triple.block-system", "triple",
       "is contained in the wreath product PSp_6(2) wr C_2 -> S_72",
       "<x, z> preserves a system of 2 blocks of size 36", ClaimCategory::Exact},
      {"triple.wreath-order", "triple",
       "is contained in the wreath product PSp_6(2) wr C_2 -> S_72",
       "the order of <x, z> divides 2 * 1451520^2", ClaimCategory::Exact},

      {"census.group-order", "census", "the group PSp_6(2)",
       "the transvection model acts transitively on the 63 nonzero vectors with group order "
       "exactly 1451520 = 2^9 (2^2-1)(2^4-1)(2^6-1)",
       ClaimCategory::Exact},
      {"census.form-orbits", "census", "PSp_6(2) -> S_36",
       "the 64 quadratic forms polarizing to the symplectic form split into orbits of sizes 36 "
       "(Arf 0) and 28 (Arf 1); the degree-36 action is faithful of order 1451520",
       ClaimCategory::Exact},
      {"census.unique-types", "census",
       "the conjugacy classes {C_i} are unique of type (3^12), (1^12.2^12), and (1^6.2.4^7)",
       "the full conjugacy census (all 1451520 elements) has exactly one class of each of the "
       "three types, and class sizes sum to the group order",
       ClaimCategory::Exact},
      {"census.two-transitive", "census", "must be 2-transitive of permutation degree 36",
       "sum of fix(g)^2 over the full enumeration equals exactly 2|G|, and the degree-36 action "
       "has no nontrivial blocks",
       ClaimCategory::Exact},
      {"census.rational-classes", "census", "the rationality of all classes in C",
       "for C_1, C_2, C_3 and every k coprime to the element order, g^k stays in the class",
       ClaimCategory::Exact},

      {"nielsen.length", "nielsen", "The corresponding straight inner Nielsen class is of length 2",
       "the count of generating product-one quadruples in (C_1, C_2, C_2, C_3) with sigma_1 "
       "fixed, scaled by |C_1|/|G|, equals exactly 2; tuple centralizers are trivial and "
       "exhaustive canonicalization finds exactly 2 classes",
       ClaimCategory::Exact},
      {"nielsen.braid-orbit", "nielsen", "forms a single orbit under the braid group action",
       "braid closure (Q_1, Q_2, Q_3 and inverses, canonicalizing each step) joins the two "
       "representatives into a single orbit",
       ClaimCategory::Exact},

      {"belyi.map-profile", "belyi",
       "we compute the desired Belyi map: f^2(X) = -2^-4 3^-8 p(X)/q(X)",
       "ramification profiles of the printed map over 0, 1, infinity are exactly 6^12, "
       "1^24.2^24, 2^6.4.8^7 and Riemann-Hurwitz sums to 142 = 2*72-2",
       ClaimCategory::Exact},
      {"belyi.monodromy-match", "belyi",
       "The corresponding ramification has to be of type (6^12), (1^24.2^24) and (2^6. 4. 8^7)",
       "the three ramification profiles equal the cycle types of (x, y, z) point for point",
       ClaimCategory::Exact},
      {"belyi.square-structure", "belyi",
       "This, obviously, gives us f in C(X) ramified over 0, 1, -1, and infinity",
       "p and q are perfect squares in Q[X] and -scale is a rational square, so f itself lies "
       "in sqrt(-1) Q(X)",
       ClaimCategory::Exact},

      {"family.delta", "family", "the discriminant of f turns out to be Delta = 2^732 3^168 ...",
       "the interpolated disc_X(p(a,X) - t q(a,X)) at each sampled a_0 equals the printed Delta "
       "coefficient for coefficient",
       ClaimCategory::Exact},
      {"family.four-branch-points", "family",
       "f and f_1 have exactly four branch points with respect to t",
       "Delta(a_0, t) vanishes exactly at t = 0 and the two roots of the printed quadratic, "
       "giving four branch points with infinity",
       ClaimCategory::Exact},
      {"family.branch-types", "family",
       "the branch cycle structure of f with respect to t is given by (3^12, 1^12.2^12, "
       "1^12.2^12, 1^6.2.4^7)",
       "fiber profiles at t = 0, r_1, r_2, infinity (r_i handled modulo a split good prime, "
       "certified exact through the discriminant order) match the four printed types",
       ClaimCategory::Exact},
      {"family.class-vector-match", "family",
       "the class vector C = (C_1, C_2, C_2, C_3) of the group PSp_6(2) -> S_36",
       "the four branch profiles are exactly the census cycle types of (C_1, C_2, C_2, C_3)",
       ClaimCategory::Exact},
      {"family.delta-square", "family",
       "both discriminants of f_1 and f_1-bar are squares, we can each exclude the group S_36",
       "all printed Delta exponents (732, 168, 154, 290, 24, 12) are even and Delta(a_0, t) is "
       "a square in Q(t)",
       ClaimCategory::Exact},

      {"dedekind.patterns", "dedekind",
       "Dedekind reduction yields Gal(f_1 | Q(t)) in {PSp_6(2), A_36, S_36}",
       "every accepted Frobenius factor-degree pattern lies in the PSp_6(2) census type list "
       "(statistical evidence over the sampled primes)",
       ClaimCategory::Statistical},
      {"dedekind.mean-fix", "dedekind", "must be 2-transitive of permutation degree 36",
       "the mean number of degree-1 factors over accepted samples is within tolerance of 1",
       ClaimCategory::Statistical},
      {"dedekind.mean-fix2", "dedekind", "must be 2-transitive of permutation degree 36",
       "the mean squared number of degree-1 factors is within tolerance of 2",
       ClaimCategory::Statistical},
      {"dedekind.coverage", "dedekind", "Dedekind reduction yields",
       "the accepted samples realize at least the configured number of distinct census types",
       ClaimCategory::Statistical},
      {"dedekind.square-disc-37", "dedekind",
       "both discriminants of f_1 and f_1-bar are squares, we can each exclude the group S_36",
       "Delta(1, t) reduced mod 37 is a square in F_37(t): even multiplicities and a "
       "quadratic-residue leading coefficient",
       ClaimCategory::Exact},
      {"dedekind.ff-irreducibility", "dedekind",
       "Since 1/(X-t) f_1-bar(p_1-bar(t)/q_1-bar(t), X) in F_37(t)[X] is irreducible",
       "NOT reproduced (function-field factorization is out of scope); the statistical "
       "2-transitivity evidence above substitutes for it - evidence, not proof",
       ClaimCategory::Cited},

      {"index63.stabilizer", "index63", "an index 63 subgroup of PSp(6,2)",
       "the 63-point action is transitive, so a point stabilizer has index exactly 63 by "
       "orbit-stabilizer",
       ClaimCategory::Exact},
      {"index63.divisors", "index63",
       "there exists a divisor d != 1 of n such that G posseses an index d subgroup",
       "the divisors of 63 exceeding 1 are exactly {3, 7, 9, 21, 63}", ClaimCategory::Exact},
      {"index63.an-minimal", "index63", "Since A_36 does not contain such a subgroup",
       "for n = 5, 6, 7 the minimal index of a proper subgroup of A_n is exactly n "
       "(exhaustive class-union normal-subgroup search plus the embedding bound); the A_36 "
       "case itself is cited",
       ClaimCategory::Exact},

      {"cited.malle", "cited",
       "By a theorem of Malle, the two Galois groups Gal(f | Q(a,t)) and Gal(f_1 | Q(t)) coincide",
       "cited theorem; not verified computationally", ClaimCategory::Cited},
      {"cited.beckmann", "cited",
       "allowing us to apply a theorem of Beckmann, to obtain Gal(f_1 | Q(t)) isomorphic to "
       "Gal(f_1-bar | F_37(t))",
       "cited theorem; the computable hypotheses (simplicity candidates, square discriminants) "
       "are checked elsewhere",
       ClaimCategory::Cited},
      {"cited.a36-minimal-degree", "cited", "Since A_36 does not contain such a subgroup",
       "classical minimal-degree fact for A_36; cited, with the n = 5..7 analogues computed "
       "exhaustively",
       ClaimCategory::Cited},
      {"cited.lemma-proof", "cited",
       "Via Galois correspondence G = Gal(L | K(t)) must contain an index d subgroup where "
       "d != 1 is a divisor of n",
       "field-theoretic lemma proof; cited, with its computational shadow (index-63 subgroup, "
       "divisor list) verified",
       ClaimCategory::Cited},
  };
  return registry;
}

const ClaimInfo* find_claim(const std::string& id)
{
  for (const auto& c : claim_registry())
    if (id == c.id)
      return &c;
  return nullptr;
}

std::string explain_claim(const std::string& id)
{
  const ClaimInfo* c = find_claim(id);
  if (!c) {
    std::ostringstream os;
    os << "unknown claim id '" << id << "'; valid ids:\n";
    for (const auto& info : claim_registry())
      os << "  " << info.id << "\n";
    throw std::invalid_argument(os.str());
  }
  const char* cat = c->category == ClaimCategory::Exact         ? "verified-exact"
                    : c->category == ClaimCategory::Statistical ? "verified-statistical"
                                                                : "cited-theorem";
  std::ostringstream os;
  os << "claim:    " << c->id << "\n"
     << "stage:    " << c->stage << "\n"
     << "anchor:   \"" << c->anchor << "\"\n"
     << "check:    " << c->check << "\n"
     << "category: " << cat << "\n";
  return os.str();
}

}  // namespace sp62v
