#ifndef SP62V_POLY_HPP
#define SP62V_POLY_HPP

#include <climits>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sp62v/rational.hpp"

namespace sp62v {

// Dense univariate polynomial over Q. Coefficient of X^i sits at index i;
// the highest index is always nonzero (the zero polynomial has no
// coefficients at all and reports the kZeroDeg sentinel).
class UniPoly {
 public:
  // Degree sentinel of the zero polynomial. Not -1: arithmetic on it is
  // meant to blow up visibly, so comparisons have to guard is_zero() first.
  static constexpr int kZeroDeg = INT_MIN;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& c);
  static UniPoly from_ints(std::initializer_list<long> ascending);
  // c * X^deg
  static UniPoly monomial(int deg, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDeg : static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& c) const;
  UniPoly pow(int e) const;
  UniPoly derivative() const;
  UniPoly monic() const;  // error on zero
  Rational eval(const Rational& x) const;

  // Euclidean division; remainder degree < divisor degree.
  static void divrem(const UniPoly& num, const UniPoly& den, UniPoly& quo, UniPoly& rem);
  // Division known to be exact; throws if a remainder appears.
  UniPoly divexact(const UniPoly& den) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  std::string str(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd. Errors if both inputs are zero.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree
  int multiplicity;
};

struct SquarefreeDecomposition {
  Rational content;  // leading coefficient of the input
  std::vector<SquarefreeFactor> factors;  // pairwise coprime, ascending multiplicity
  UniPoly reconstruct() const;
};

// Yun's algorithm (characteristic 0). Errors on the zero polynomial.
SquarefreeDecomposition squarefree_decomposition(const UniPoly& f);

// Resultant with the Sylvester-determinant sign convention, computed by a
// subresultant pseudo-remainder sequence over Z after clearing denominators.
// Errors if either input is the zero polynomial.
Rational resultant(const UniPoly& f, const UniPoly& g);

// (-1)^{d(d-1)/2} res(f, f') / lc(f); requires deg f >= 1.
Rational discriminant(const UniPoly& f);

// Unique interpolating polynomial of degree < #points. Errors on a repeated
// abscissa.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// Quotient of univariate polynomials over Q, kept with monic denominator and
// gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly::constant(Rational(1))) {}
  RatFunc(UniPoly num, UniPoly den);
  static RatFunc from_poly(UniPoly p) { return RatFunc(std::move(p), UniPoly::constant(Rational(1))); }
  static RatFunc constant(const Rational& c) { return from_poly(UniPoly::constant(c)); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;

  // Errors if the denominator vanishes at x.
  Rational eval(const Rational& x) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  UniPoly num_, den_;
};

// Polynomial in X whose coefficients are rational functions in the family
// parameter a. Highest X-coefficient nonzero.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<RatFunc> x_coeffs) : xc_(std::move(x_coeffs)) { trim(); }
  static BiPoly constant(RatFunc c);

  bool is_zero() const { return xc_.empty(); }
  int x_degree() const { return xc_.empty() ? UniPoly::kZeroDeg : static_cast<int>(xc_.size()) - 1; }
  const RatFunc& x_coeff(int i) const;
  const std::vector<RatFunc>& x_coeffs() const { return xc_; }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly pow(int e) const;

  // Evaluate every coefficient at a = a0; errors if a0 is a pole of any
  // coefficient.
  UniPoly specialize(const Rational& a0) const;

 private:
  void trim();
  std::vector<RatFunc> xc_;
};

// Exact discriminant of F(t, X) = P(a0, X) - t * Q(a0, X) with respect to X,
// as a polynomial in t: specialization at rational t-samples plus Newton
// interpolation against the Sylvester degree bound, then re-verification at
// extra sample points. Errors with "degenerate specialization" if the leading
// X-coefficient vanishes at a0 (the t-free leading term is required).
UniPoly discriminant_in_t(const BiPoly& P, const BiPoly& Q, const Rational& a0);

// Same computation starting from the already specialized polynomials.
UniPoly discriminant_in_t_specialized(const UniPoly& p_at_a0, const UniPoly& q_at_a0);

}  // namespace sp62v

#endif
