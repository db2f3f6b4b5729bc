#ifndef SP62V_CONSTANTS_HPP
#define SP62V_CONSTANTS_HPP

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "sp62v/perm.hpp"
#include "sp62v/poly.hpp"

namespace sp62v {

// The printed discriminant in factored shape: a scalar times powers of
// polynomials in (a, t). Factors reuse BiPoly with X standing for t.
struct DeltaFactored {
  Rational constant;
  std::vector<std::pair<BiPoly, long>> factors;

  UniPoly specialize(const Rational& a0) const;  // expanded polynomial in t
  std::vector<long> exponents() const;
  // Scalar in front of the monic-in-t part after specializing a = a0.
  Rational leading_constant(const Rational& a0) const;
};

// Exact constants shipped with the toolkit: the permutation pair, both
// polynomial families in their printed factored form, the scale, and the
// printed discriminant. Coefficient arrays are ascending in the exponent;
// rationals are "n" or "n/d" strings.
struct ConstantsFile {
  std::string composition_convention;  // "apply-left-first"
  std::string x_text, z_text;
  Perm x, z;

  Rational belyi_scale;       // -1/(2^4 3^8)
  Rational one_fiber_shift;   // 2^4 3^8, the multiplier for the fiber over 1
  std::vector<std::pair<UniPoly, int>> belyi_p_factors, belyi_q_factors;
  UniPoly belyi_p, belyi_q;   // expanded products

  std::vector<std::pair<BiPoly, int>> family_p_factors, family_q_factors;
  BiPoly family_p, family_q;  // expanded products

  DeltaFactored delta;

  static ConstantsFile load(const std::string& path);
  static ConstantsFile from_json(const nlohmann::ordered_json& j);
  nlohmann::ordered_json to_json() const;
};

}  // namespace sp62v

#endif
