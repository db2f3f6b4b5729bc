#include "sp62v/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sp62v {

bool rational_is_square(const Rational& q, Rational* root)
{
  if (sgn(q) < 0)
    return false;
  Integer num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return false;
  if (root) {
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(rn, rd);
    root->canonicalize();
  }
  return true;
}

Rational rational_pow(const Rational& base, long exp)
{
  if (exp == 0)
    return Rational(1);
  if (base == 0 && exp < 0)
    throw std::invalid_argument("negative power of zero");
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  if (exp < 0)
    r = Rational(1) / r;
  r.canonicalize();
  return r;
}

void UniPoly::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c)
{
  UniPoly p;
  if (c != 0)
    p.c_.push_back(c);
  return p;
}

UniPoly UniPoly::from_ints(std::initializer_list<long> ascending)
{
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (long v : ascending)
    c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monomial(int deg, const Rational& c)
{
  if (deg < 0)
    throw std::invalid_argument("negative monomial degree");
  UniPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    p.c_.back() = c;
  }
  return p;
}

Rational UniPoly::coeff(int i) const
{
  if (i < 0 || static_cast<size_t>(i) >= c_.size())
    return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const
{
  if (c_.empty())
    throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const
{
  UniPoly r(*this);
  for (auto& x : r.c_)
    x = -x;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const
{
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    c[i] += o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const
{
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    c[i] -= o.c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const
{
  if (is_zero() || o.is_zero())
    return UniPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const
{
  if (s == 0)
    return UniPoly();
  UniPoly r(*this);
  for (auto& x : r.c_)
    x *= s;
  return r;
}

UniPoly UniPoly::pow(int e) const
{
  if (e < 0)
    throw std::invalid_argument("negative polynomial power");
  UniPoly r = UniPoly::constant(Rational(1));
  UniPoly b = *this;
  while (e > 0) {
    if (e & 1)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::derivative() const
{
  if (c_.size() <= 1)
    return UniPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const
{
  if (is_zero())
    throw std::logic_error("monic of zero polynomial");
  return scaled(Rational(1) / leading());
}

Rational UniPoly::eval(const Rational& x) const
{
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * x + c_[i];
  return acc;
}

void UniPoly::divrem(const UniPoly& num, const UniPoly& den, UniPoly& quo, UniPoly& rem)
{
  if (den.is_zero())
    throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> r = num.c_;
  const int dd = den.degree();
  std::vector<Rational> q;
  if (static_cast<int>(r.size()) - 1 >= dd)
    q.assign(r.size() - static_cast<size_t>(dd), Rational(0));
  const Rational lc_inv = Rational(1) / den.leading();
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    if (r[static_cast<size_t>(i)] == 0)
      continue;
    Rational f = r[static_cast<size_t>(i)] * lc_inv;
    q[static_cast<size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<size_t>(i - dd + j)] -= f * den.c_[static_cast<size_t>(j)];
  }
  quo = UniPoly(std::move(q));
  rem = UniPoly(std::move(r));
}

UniPoly UniPoly::divexact(const UniPoly& den) const
{
  UniPoly q, r;
  divrem(*this, den, q, r);
  if (!r.is_zero())
    throw std::logic_error("division expected to be exact");
  return q;
}

std::string UniPoly::str(const std::string& var) const
{
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c == 0)
      continue;
    if (!first)
      os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0 || a != 1)
      os << a.get_str();
    if (i > 0) {
      if (a != 1)
        os << "*";
      os << var;
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Integer polynomial layer backing gcd and resultants.
using ZPoly = std::vector<Integer>;  // ascending coefficients, trailing nonzero

void ztrim(ZPoly& p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

int zdeg(const ZPoly& p)
{
  return static_cast<int>(p.size()) - 1;  // -1 encodes zero here (internal only)
}

// Clears denominators: returns Z with Z = scale * f, scale > 0.
ZPoly to_integer(const UniPoly& f, Integer& scale)
{
  Integer lcm(1);
  for (const auto& c : f.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    Rational c = f.coeffs()[i] * Rational(lcm);
    z[i] = c.get_num();
  }
  scale = lcm;
  return z;
}

Integer zcontent(const ZPoly& p)
{
  Integer g(0);
  for (const auto& c : p)
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer zdivexact_checked(const Integer& a, const Integer& b)
{
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw std::logic_error("inexact integer division in PRS");
  return q;
}

void zdiv_scalar(ZPoly& p, const Integer& d)
{
  for (auto& c : p)
    c = zdivexact_checked(c, d);
}

Integer zpow(const Integer& b, unsigned long e)
{
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b; division-free and
// exact over Z by construction.
ZPoly zprem(const ZPoly& a, const ZPoly& b)
{
  const int da = zdeg(a), db = zdeg(b);
  if (da < db)
    throw std::logic_error("zprem degree order");
  const Integer& lb = b.back();
  ZPoly r = a;
  for (auto& c : r)
    c *= zpow(lb, static_cast<unsigned long>(da - db + 1));
  for (int i = da; i >= db; --i) {
    if (r[static_cast<size_t>(i)] == 0)
      continue;
    Integer f = zdivexact_checked(r[static_cast<size_t>(i)], lb);
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
  }
  ztrim(r);
  return r;
}

ZPoly zprimitive(ZPoly p)
{
  if (p.empty())
    return p;
  Integer c = zcontent(p);
  if (sgn(p.back()) < 0)
    c = -c;
  zdiv_scalar(p, c);
  return p;
}

// Primitive PRS gcd over Z; returns a primitive gcd with positive leading
// coefficient.
ZPoly zgcd(ZPoly a, ZPoly b)
{
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  if (zdeg(a) < zdeg(b))
    std::swap(a, b);
  while (!b.empty()) {
    if (zdeg(b) == 0)
      return ZPoly{Integer(1)};
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = zprimitive(std::move(r));
  }
  return a;
}

// Resultant over Z. Walks a subresultant-divided PRS for coefficient control
// and tracks the exact Sylvester-convention value through the textbook
// identities
//   res(a, b) = (-1)^(deg a * deg b) res(b, a)
//   res(b, a) = lc(b)^(deg a - deg r) res(b, r)      for r = a mod b
//   res(b, c*p) = c^(deg b) res(b, p)
// so correctness does not depend on the divisor bookkeeping, only on the
// divisions being exact (which is checked).
Rational zresultant(ZPoly a, ZPoly b)
{
  if (a.empty() || b.empty())
    throw std::invalid_argument("resultant of zero polynomial");
  Rational acc(1);
  bool flip = false;
  if (zdeg(a) < zdeg(b)) {
    if ((zdeg(a) & 1) && (zdeg(b) & 1))
      flip = !flip;
    std::swap(a, b);
  }
  Integer g(1), h(1);
  while (true) {
    const int da = zdeg(a), db = zdeg(b);
    if (db == 0) {
      acc *= rational_pow(Rational(b.back()), da);
      break;
    }
    // res(a, b) = (-1)^(da*db) * lc(b)^(da - dr~) * res(b, r~) with
    // r~ = lc(b)^(delta+1) * a mod b, rescaled back by lc(b)^((delta+1)*db);
    // the PRS then stores r = r~ / (g*h^delta), accounted by div^db.
    const int delta = da - db;
    if ((da & 1) && (db & 1))
      flip = !flip;
    ZPoly rt = zprem(a, b);
    if (rt.empty())
      return Rational(0);
    const int dr = zdeg(rt);
    const Rational lcb(b.back());
    acc *= rational_pow(lcb, da - dr);
    acc /= rational_pow(lcb, static_cast<long>(delta + 1) * db);
    Integer div = g * zpow(h, static_cast<unsigned long>(delta));
    zdiv_scalar(rt, div);
    acc *= rational_pow(Rational(div), db);
    a = std::move(b);
    b = std::move(rt);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = zdivexact_checked(zpow(g, static_cast<unsigned long>(delta)),
                            zpow(h, static_cast<unsigned long>(delta - 1)));
    }
  }
  if (flip)
    acc = -acc;
  return acc;
}

UniPoly from_integer(const ZPoly& z)
{
  std::vector<Rational> c(z.size());
  for (size_t i = 0; i < z.size(); ++i)
    c[i] = Rational(z[i]);
  return UniPoly(std::move(c));
}

}  // namespace

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g)
{
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd of zero polynomials");
  if (f.is_zero())
    return g.monic();
  if (g.is_zero())
    return f.monic();
  Integer sf, sg;
  ZPoly a = to_integer(f, sf), b = to_integer(g, sg);
  return from_integer(zgcd(std::move(a), std::move(b))).monic();
}

UniPoly SquarefreeDecomposition::reconstruct() const
{
  UniPoly p = UniPoly::constant(content);
  for (const auto& sf : factors)
    p = p * sf.factor.pow(sf.multiplicity);
  return p;
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly& f)
{
  if (f.is_zero())
    throw std::invalid_argument("squarefree decomposition of zero polynomial");
  SquarefreeDecomposition out;
  out.content = f.leading();
  if (f.degree() == 0)
    return out;
  // Yun's algorithm on the monic part.
  UniPoly p = f.monic();
  UniPoly dp = p.derivative();
  UniPoly a0 = poly_gcd(p, dp);
  UniPoly b = p.divexact(a0);
  UniPoly c = dp.divexact(a0);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly ai = d.is_zero() ? b.monic() : poly_gcd(b, d);
    if (ai.degree() > 0)
      out.factors.push_back({ai, i});
    b = b.divexact(ai);
    if (b.degree() <= 0)
      break;
    c = d.divexact(ai);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Rational resultant(const UniPoly& f, const UniPoly& g)
{
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant of zero polynomial");
  if (f.degree() == 0 && g.degree() == 0)
    return Rational(1);
  if (f.degree() == 0)
    return rational_pow(f.leading(), g.degree());
  if (g.degree() == 0)
    return rational_pow(g.leading(), f.degree());
  Integer sf, sg;
  ZPoly a = to_integer(f, sf), b = to_integer(g, sg);
  Rational r = zresultant(std::move(a), std::move(b));
  // res(sf*f, sg*g) = sf^deg g * sg^deg f * res(f, g)
  r /= Rational(zpow(sf, static_cast<unsigned long>(g.degree())));
  r /= Rational(zpow(sg, static_cast<unsigned long>(f.degree())));
  r.canonicalize();
  return r;
}

Rational discriminant(const UniPoly& f)
{
  if (f.is_zero() || f.degree() < 1)
    throw std::invalid_argument("discriminant needs degree >= 1");
  if (f.degree() == 1)
    return Rational(1);
  const int d = f.degree();
  Rational r = resultant(f, f.derivative());
  r /= f.leading();
  if (((static_cast<long>(d) * (d - 1)) / 2) % 2 == 1)
    r = -r;
  return r;
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points)
{
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("repeated abscissa in interpolation");
  // Newton divided differences.
  const size_t n = points.size();
  std::vector<Rational> coef(n);
  for (size_t i = 0; i < n; ++i)
    coef[i] = points[i].second;
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n; i-- > k;)
      coef[i] = (coef[i] - coef[i - 1]) / (points[i].first - points[i - k].first);
  UniPoly p;
  for (size_t i = n; i-- > 0;) {
    p = p * (UniPoly::monomial(1) - UniPoly::constant(points[i].first)) +
        UniPoly::constant(coef[i]);
  }
  return p;
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den))
{
  if (den_.is_zero())
    throw std::invalid_argument("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(Rational(1));
    return;
  }
  UniPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  Rational lc = den_.leading();
  den_ = den_.scaled(Rational(1) / lc);
  num_ = num_.scaled(Rational(1) / lc);
}

RatFunc RatFunc::operator+(const RatFunc& o) const
{
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const
{
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const
{
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

Rational RatFunc::eval(const Rational& x) const
{
  Rational d = den_.eval(x);
  if (d == 0)
    throw std::domain_error("rational function pole at evaluation point");
  return num_.eval(x) / d;
}

void BiPoly::trim()
{
  while (!xc_.empty() && xc_.back().is_zero())
    xc_.pop_back();
}

BiPoly BiPoly::constant(RatFunc c)
{
  BiPoly b;
  if (!c.is_zero())
    b.xc_.push_back(std::move(c));
  return b;
}

const RatFunc& BiPoly::x_coeff(int i) const
{
  static const RatFunc zero;
  if (i < 0 || static_cast<size_t>(i) >= xc_.size())
    return zero;
  return xc_[static_cast<size_t>(i)];
}

BiPoly BiPoly::operator+(const BiPoly& o) const
{
  std::vector<RatFunc> c(std::max(xc_.size(), o.xc_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < xc_.size() && i < o.xc_.size())
      c[i] = xc_[i] + o.xc_[i];
    else if (i < xc_.size())
      c[i] = xc_[i];
    else
      c[i] = o.xc_[i];
  }
  return BiPoly(std::move(c));
}

BiPoly BiPoly::operator*(const BiPoly& o) const
{
  if (is_zero() || o.is_zero())
    return BiPoly();
  std::vector<RatFunc> c(xc_.size() + o.xc_.size() - 1);
  for (size_t i = 0; i < xc_.size(); ++i) {
    if (xc_[i].is_zero())
      continue;
    for (size_t j = 0; j < o.xc_.size(); ++j)
      c[i + j] = c[i + j] + xc_[i] * o.xc_[j];
  }
  return BiPoly(std::move(c));
}

BiPoly BiPoly::pow(int e) const
{
  if (e < 0)
    throw std::invalid_argument("negative polynomial power");
  BiPoly r = BiPoly::constant(RatFunc::constant(Rational(1)));
  BiPoly b = *this;
  while (e > 0) {
    if (e & 1)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

UniPoly BiPoly::specialize(const Rational& a0) const
{
  std::vector<Rational> c(xc_.size());
  for (size_t i = 0; i < xc_.size(); ++i)
    c[i] = xc_[i].eval(a0);
  return UniPoly(std::move(c));
}

UniPoly discriminant_in_t_specialized(const UniPoly& p_at_a0, const UniPoly& q_at_a0)
{
  if (p_at_a0.is_zero())
    throw std::invalid_argument("degenerate specialization: p vanishes");
  const int d = p_at_a0.degree();
  if (!q_at_a0.is_zero() && q_at_a0.degree() >= d)
    throw std::invalid_argument("degenerate specialization: deg q >= deg p");
  if (d < 2)
    throw std::invalid_argument("family degree too small for a discriminant");
  // Every Sylvester entry of (f, f') is linear in t, so
  // deg_t res <= (#f rows) + (#f' rows) = (d-1) + d = 2d - 1.
  const int bound = 2 * d - 1;
  const int extra = 5;
  auto disc_at = [&](long t) {
    UniPoly f = p_at_a0 - q_at_a0.scaled(Rational(t));
    return discriminant(f);
  };
  std::vector<std::pair<Rational, Rational>> samples;
  samples.reserve(static_cast<size_t>(bound) + 1);
  for (long t = 0; t <= bound; ++t)
    samples.emplace_back(Rational(t), disc_at(t));
  UniPoly disc_t = interpolate(samples);
  for (long t = bound + 1; t <= bound + extra; ++t) {
    if (disc_t.eval(Rational(t)) != disc_at(t))
      throw std::logic_error("discriminant interpolation failed verification");
  }
  return disc_t;
}

UniPoly discriminant_in_t(const BiPoly& P, const BiPoly& Q, const Rational& a0)
{
  if (P.is_zero())
    throw std::invalid_argument("degenerate specialization: zero family");
  for (const auto& c : P.x_coeffs())
    if (!c.is_zero() && c.den().eval(a0) == 0)
      throw std::invalid_argument("degenerate specialization: pole at a0");
  for (const auto& c : Q.x_coeffs())
    if (!c.is_zero() && c.den().eval(a0) == 0)
      throw std::invalid_argument("degenerate specialization: pole at a0");
  if (P.x_coeffs().back().eval(a0) == 0)
    throw std::invalid_argument("degenerate specialization: leading coefficient vanishes at a0");
  return discriminant_in_t_specialized(P.specialize(a0), Q.specialize(a0));
}

}  // namespace sp62v
