#include "sp62v/gfp.hpp"

#include <algorithm>
#include <stdexcept>

namespace sp62v {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m)
{
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m)
{
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n)
{
  if (n < 2)
    return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

PrimeField::PrimeField(uint64_t p) : p_(p)
{
  if (!is_prime_u64(p))
    throw std::invalid_argument("modulus is not prime");
}

uint64_t PrimeField::add(uint64_t a, uint64_t b) const
{
  uint64_t s = a + b;
  return s >= p_ ? s - p_ : s;
}

uint64_t PrimeField::sub(uint64_t a, uint64_t b) const
{
  return a >= b ? a - b : a + p_ - b;
}

uint64_t PrimeField::mul(uint64_t a, uint64_t b) const
{
  return mulmod_u64(a, b, p_);
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const
{
  return powmod_u64(a, e, p_);
}

uint64_t PrimeField::inv(uint64_t a) const
{
  if (a == 0)
    throw std::domain_error("inverse of zero");
  return powmod_u64(a, p_ - 2, p_);
}

uint64_t PrimeField::reduce(const Rational& q) const
{
  uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (den == 0)
    throw std::invalid_argument("bad reduction prime");
  uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  return mul(num, inv(den));
}

bool PrimeField::is_quadratic_residue(uint64_t a) const
{
  if (a % p_ == 0)
    throw std::domain_error("residue test of zero");
  if (p_ == 2)
    return true;
  return powmod_u64(a % p_, (p_ - 1) / 2, p_) == 1;
}

void GFPoly::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

GFPoly::GFPoly(PrimeField field, std::vector<uint64_t> coeffs) : field_(field), c_(std::move(coeffs))
{
  for (auto& x : c_)
    x %= field_.p();
  trim();
}

uint64_t GFPoly::coeff(int i) const
{
  if (i < 0 || static_cast<size_t>(i) >= c_.size())
    return 0;
  return c_[static_cast<size_t>(i)];
}

uint64_t GFPoly::leading() const
{
  if (c_.empty())
    throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

GFPoly GFPoly::constant(PrimeField f, uint64_t c)
{
  GFPoly p(f);
  c %= f.p();
  if (c)
    p.c_.push_back(c);
  return p;
}

GFPoly GFPoly::monomial(PrimeField f, int deg, uint64_t c)
{
  GFPoly p(f);
  c %= f.p();
  if (c) {
    p.c_.assign(static_cast<size_t>(deg) + 1, 0);
    p.c_.back() = c;
  }
  return p;
}

GFPoly GFPoly::operator+(const GFPoly& o) const
{
  GFPoly r(field_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    r.c_[i] = field_.add(r.c_[i], o.c_[i]);
  r.trim();
  return r;
}

GFPoly GFPoly::operator-(const GFPoly& o) const
{
  GFPoly r(field_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    r.c_[i] = field_.sub(r.c_[i], o.c_[i]);
  r.trim();
  return r;
}

GFPoly GFPoly::operator*(const GFPoly& o) const
{
  if (is_zero() || o.is_zero())
    return GFPoly(field_);
  GFPoly r(field_);
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = field_.add(r.c_[i + j], field_.mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

GFPoly GFPoly::scaled(uint64_t s) const
{
  s %= field_.p();
  GFPoly r(field_);
  if (s == 0)
    return r;
  r.c_ = c_;
  for (auto& x : r.c_)
    x = field_.mul(x, s);
  return r;
}

GFPoly GFPoly::monic() const
{
  if (is_zero())
    throw std::logic_error("monic of zero polynomial");
  return scaled(field_.inv(leading()));
}

GFPoly GFPoly::derivative() const
{
  GFPoly r(field_);
  if (c_.size() <= 1)
    return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = field_.mul(c_[i], i % field_.p());
  r.trim();
  return r;
}

uint64_t GFPoly::eval(uint64_t x) const
{
  uint64_t acc = 0;
  x %= field_.p();
  for (size_t i = c_.size(); i-- > 0;)
    acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

void GFPoly::divrem(const GFPoly& num, const GFPoly& den, GFPoly& quo, GFPoly& rem)
{
  if (den.is_zero())
    throw std::invalid_argument("polynomial division by zero");
  const PrimeField& F = num.field_;
  std::vector<uint64_t> r = num.c_;
  const int dd = den.degree();
  std::vector<uint64_t> q;
  if (static_cast<int>(r.size()) - 1 >= dd)
    q.assign(r.size() - static_cast<size_t>(dd), 0);
  const uint64_t lc_inv = F.inv(den.leading());
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    if (r[static_cast<size_t>(i)] == 0)
      continue;
    uint64_t f = F.mul(r[static_cast<size_t>(i)], lc_inv);
    q[static_cast<size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      r[static_cast<size_t>(i - dd + j)] =
          F.sub(r[static_cast<size_t>(i - dd + j)], F.mul(f, den.c_[static_cast<size_t>(j)]));
  }
  quo = GFPoly(F, std::move(q));
  rem = GFPoly(F, std::move(r));
}

GFPoly GFPoly::divexact(const GFPoly& den) const
{
  GFPoly q(field_), r(field_);
  divrem(*this, den, q, r);
  if (!r.is_zero())
    throw std::logic_error("division expected to be exact");
  return q;
}

bool GFPoly::lex_less(const GFPoly& o) const
{
  if (degree() != o.degree())
    return (is_zero() ? -1 : degree()) < (o.is_zero() ? -1 : o.degree());
  return c_ < o.c_;
}

GFPoly gf_gcd(GFPoly a, GFPoly b)
{
  while (!b.is_zero()) {
    GFPoly q(a.field()), r(a.field());
    GFPoly::divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    throw std::invalid_argument("gcd of zero polynomials");
  return a.monic();
}

GFPoly gf_powmod(const GFPoly& base, const Integer& e, const GFPoly& m)
{
  if (sgn(e) < 0)
    throw std::invalid_argument("negative exponent");
  GFPoly q(base.field()), r(base.field());
  GFPoly::divrem(base, m, q, r);
  GFPoly acc = GFPoly::constant(base.field(), 1);
  Integer exp = e;
  while (exp != 0) {
    if (mpz_odd_p(exp.get_mpz_t())) {
      acc = acc * r;
      GFPoly::divrem(acc, m, q, acc);
    }
    r = r * r;
    GFPoly::divrem(r, m, q, r);
    exp >>= 1;
  }
  return acc;
}

GFPoly reduce_mod_p(const UniPoly& f, uint64_t p)
{
  PrimeField F(p);
  std::vector<uint64_t> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = F.reduce(f.coeffs()[i]);
  return GFPoly(F, std::move(c));
}

uint64_t SplitMix64::next()
{
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t n)
{
  if (n == 0)
    throw std::invalid_argument("below(0)");
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

std::vector<GFFactor> gf_squarefree(const GFPoly& f)
{
  if (f.is_zero())
    throw std::invalid_argument("squarefree decomposition of zero polynomial");
  std::vector<GFFactor> out;
  const PrimeField& F = f.field();
  const uint64_t p = F.p();
  GFPoly g = f.monic();
  if (g.degree() == 0)
    return out;

  // Recurse on p-th power parts; multiplicities of the inner part scale by p.
  auto handle_pth_root = [&](const GFPoly& h, int mult_scale) {
    // h = sum a_i X^{ip} -> root = sum a_i X^i (Frobenius is trivial on F_p)
    std::vector<uint64_t> rc(static_cast<size_t>(h.degree() / static_cast<int>(p)) + 1, 0);
    for (int i = 0; i <= h.degree(); ++i) {
      uint64_t ci = h.coeff(i);
      if (ci) {
        if (i % static_cast<int>(p) != 0)
          throw std::logic_error("p-th power part malformed");
        rc[static_cast<size_t>(i) / p] = ci;
      }
    }
    GFPoly root(F, std::move(rc));
    for (auto& sf : gf_squarefree(root))
      out.push_back({sf.factor, sf.multiplicity * mult_scale});
  };

  GFPoly dg = g.derivative();
  if (dg.is_zero()) {
    handle_pth_root(g, static_cast<int>(p));
    return out;
  }
  GFPoly a0 = gf_gcd(g, dg);
  GFPoly w = g.divexact(a0);
  // w carries each non-p-multiple-multiplicity factor once.
  int i = 1;
  GFPoly rest = a0;
  while (w.degree() > 0) {
    GFPoly y = gf_gcd(w, rest);
    GFPoly fac = w.divexact(y);
    if (fac.degree() > 0)
      out.push_back({fac.monic(), i});
    w = y;
    rest = rest.divexact(y);
    ++i;
  }
  if (rest.degree() > 0)
    handle_pth_root(rest, static_cast<int>(p));
  std::sort(out.begin(), out.end(), [](const GFFactor& a, const GFFactor& b) {
    if (a.multiplicity != b.multiplicity)
      return a.multiplicity < b.multiplicity;
    return a.factor.lex_less(b.factor);
  });
  return out;
}

namespace {

// Distinct-degree split of a squarefree monic polynomial: list of
// (product-of-degree-d-factors, d).
std::vector<std::pair<GFPoly, int>> distinct_degree(const GFPoly& f)
{
  const PrimeField& F = f.field();
  std::vector<std::pair<GFPoly, int>> out;
  GFPoly rem = f;
  GFPoly h = GFPoly::monomial(F, 1);  // X^(p^d) mod f, incrementally
  int d = 0;
  while (rem.degree() > 0) {
    ++d;
    if (2 * d > rem.degree()) {
      out.emplace_back(rem, rem.degree());
      break;
    }
    h = gf_powmod(h, Integer(static_cast<unsigned long>(F.p())), rem);
    GFPoly g = gf_gcd(h - GFPoly::monomial(F, 1), rem);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rem = rem.divexact(g);
      GFPoly q(F);
      GFPoly::divrem(h, rem, q, h);
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree split (odd p).
void equal_degree(const GFPoly& f, int d, SplitMix64& rng, std::vector<GFPoly>& out)
{
  const PrimeField& F = f.field();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), static_cast<unsigned long>(F.p()),
                static_cast<unsigned long>(d));
  exponent = (exponent - 1) / 2;
  while (true) {
    std::vector<uint64_t> rc(static_cast<size_t>(f.degree()), 0);
    for (auto& x : rc)
      x = rng.below(F.p());
    GFPoly r(F, std::move(rc));
    if (r.degree() < 1)
      continue;
    GFPoly g = gf_gcd(r, f);
    if (g.degree() == 0) {
      GFPoly b = gf_powmod(r, exponent, f);
      g = gf_gcd(b - GFPoly::constant(F, 1), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f.divexact(g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<GFFactor> gf_factor(const GFPoly& f, uint64_t seed)
{
  if (f.is_zero() || f.degree() < 1)
    throw std::invalid_argument("factorization needs a nonconstant polynomial");
  if (f.field().p() == 2)
    throw std::invalid_argument("p = 2 not supported by the equal-degree splitter");
  SplitMix64 rng(seed ^ 0x5bf0f5e2ad1c6f3bull);
  std::vector<GFFactor> out;
  for (const auto& sf : gf_squarefree(f)) {
    for (const auto& [prod, d] : distinct_degree(sf.factor)) {
      std::vector<GFPoly> irr;
      equal_degree(prod, d, rng, irr);
      for (auto& g : irr)
        out.push_back({std::move(g), sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const GFFactor& a, const GFFactor& b) {
    if (a.factor.degree() != b.factor.degree())
      return a.factor.degree() < b.factor.degree();
    if (!(a.factor == b.factor))
      return a.factor.lex_less(b.factor);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

CycleType gf_degree_pattern(const GFPoly& f, uint64_t seed)
{
  if (f.is_zero() || f.degree() < 1)
    throw std::invalid_argument("degree pattern needs a nonconstant polynomial");
  if (gf_gcd(f, f.derivative()).degree() != 0)
    throw std::invalid_argument("ramified specialization");
  std::vector<int> lengths;
  for (const auto& fac : gf_factor(f, seed))
    for (int k = 0; k < fac.multiplicity; ++k)
      lengths.push_back(fac.factor.degree());
  return CycleType::from_lengths(lengths);
}

bool gf_is_irreducible(const GFPoly& f)
{
  if (f.is_zero() || f.degree() < 1)
    return false;
  const PrimeField& F = f.field();
  const int n = f.degree();
  GFPoly x = GFPoly::monomial(F, 1);
  GFPoly h = x;
  for (int i = 1; i < n; ++i) {
    h = gf_powmod(h, Integer(static_cast<unsigned long>(F.p())), f);
    if (gf_gcd(h - x, f).degree() != 0)
      return false;
  }
  h = gf_powmod(h, Integer(static_cast<unsigned long>(F.p())), f);
  return (h - x).is_zero();
}

}  // namespace sp62v
