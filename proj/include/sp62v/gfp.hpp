#ifndef SP62V_GFP_HPP
#define SP62V_GFP_HPP

#include <cstdint>
#include <vector>

#include "sp62v/cycle_type.hpp"
#include "sp62v/poly.hpp"

namespace sp62v {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(uint64_t n);

// Prime field F_p with machine-word modulus.
class PrimeField {
 public:
  explicit PrimeField(uint64_t p);
  uint64_t p() const { return p_; }

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;
  // Reduces a rational; errors when p divides the denominator.
  uint64_t reduce(const Rational& q) const;
  bool is_quadratic_residue(uint64_t a) const;  // for a != 0

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint64_t p_;
};

// Dense polynomial over F_p, coefficients in [0, p), highest nonzero.
class GFPoly {
 public:
  GFPoly() : field_(2) {}
  explicit GFPoly(PrimeField field) : field_(field) {}
  GFPoly(PrimeField field, std::vector<uint64_t> coeffs);

  const PrimeField& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? UniPoly::kZeroDeg : static_cast<int>(c_.size()) - 1; }
  uint64_t coeff(int i) const;
  uint64_t leading() const;
  const std::vector<uint64_t>& coeffs() const { return c_; }

  static GFPoly constant(PrimeField f, uint64_t c);
  static GFPoly monomial(PrimeField f, int deg, uint64_t c = 1);

  GFPoly operator+(const GFPoly& o) const;
  GFPoly operator-(const GFPoly& o) const;
  GFPoly operator*(const GFPoly& o) const;
  GFPoly scaled(uint64_t s) const;
  GFPoly monic() const;
  GFPoly derivative() const;
  uint64_t eval(uint64_t x) const;

  static void divrem(const GFPoly& num, const GFPoly& den, GFPoly& quo, GFPoly& rem);
  GFPoly divexact(const GFPoly& den) const;

  bool operator==(const GFPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
  // Degree-then-coefficient order used to sort factor lists.
  bool lex_less(const GFPoly& o) const;

 private:
  void trim();
  PrimeField field_;
  std::vector<uint64_t> c_;
};

GFPoly gf_gcd(GFPoly a, GFPoly b);
// base^e mod m in F_p[X].
GFPoly gf_powmod(const GFPoly& base, const Integer& e, const GFPoly& m);

// Coefficientwise reduction; errors with "bad reduction prime" when p divides
// a denominator.
GFPoly reduce_mod_p(const UniPoly& f, uint64_t p);

// Counter-based deterministic generator (splitmix64); carried by value so
// factorizations are reproducible from their seed.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // Uniform in [0, n) by rejection.
  uint64_t below(uint64_t n);
};

struct GFFactor {
  GFPoly factor;  // monic irreducible
  int multiplicity;
};

// Complete factorization: squarefree split, distinct-degree split, then
// seeded Cantor-Zassenhaus equal-degree split. Factors sorted by degree then
// coefficient order. Errors on constant input.
std::vector<GFFactor> gf_factor(const GFPoly& f, uint64_t seed = 1);

// Squarefree part list (factor, multiplicity), char-p aware.
std::vector<GFFactor> gf_squarefree(const GFPoly& f);

// Multiset of irreducible factor degrees of a separable polynomial; errors
// with "ramified specialization" if f is not squarefree.
CycleType gf_degree_pattern(const GFPoly& f, uint64_t seed = 1);

// Rabin irreducibility verification, used by tests and spot checks.
bool gf_is_irreducible(const GFPoly& f);

}  // namespace sp62v

#endif
