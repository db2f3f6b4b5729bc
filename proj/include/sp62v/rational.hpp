#ifndef SP62V_RATIONAL_HPP
#define SP62V_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sp62v {

// Exact rational numbers. mpq_class keeps values canonical (lowest terms,
// positive denominator, sign on the numerator), which is exactly the
// invariant the rest of the code relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
  if (den == 0)
    throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "n", "n/d" or "-n/d". Whitespace is not accepted.
inline Rational parse_rational(const std::string& s)
{
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

// Serializes in the same "n" / "n/d" shape parse_rational accepts.
inline std::string rational_str(const Rational& q)
{
  return q.get_str();
}

inline bool is_integer(const Rational& q)
{
  return q.get_den() == 1;
}

// q = r^2 for rational r? If so and root != nullptr, stores the nonnegative root.
bool rational_is_square(const Rational& q, Rational* root = nullptr);

// (base)^exp for integer exp (exp may be negative if base != 0).
Rational rational_pow(const Rational& base, long exp);

}  // namespace sp62v

#endif
