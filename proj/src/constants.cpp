#include "sp62v/constants.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sp62v {

using nlohmann::ordered_json;

UniPoly DeltaFactored::specialize(const Rational& a0) const
{
  UniPoly out = UniPoly::constant(constant);
  for (const auto& [factor, exp] : factors)
    out = out * factor.specialize(a0).pow(static_cast<int>(exp));
  return out;
}

std::vector<long> DeltaFactored::exponents() const
{
  std::vector<long> out;
  for (const auto& [factor, exp] : factors)
    out.push_back(exp);
  return out;
}

Rational DeltaFactored::leading_constant(const Rational& a0) const
{
  Rational lead = constant;
  for (const auto& [factor, exp] : factors) {
    UniPoly f = factor.specialize(a0);
    lead *= rational_pow(f.leading(), exp);
  }
  return lead;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
  throw std::runtime_error("constants file: field '" + field + "': " + what);
}

const ordered_json& need(const ordered_json& j, const std::string& key, const std::string& path)
{
  if (!j.contains(key))
    fail(path + key, "missing");
  return j.at(key);
}

Rational rational_field(const ordered_json& j, const std::string& path)
{
  if (!j.is_string())
    fail(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

// {"sign": +-1, "prime_powers": [[p, e], ...]} -> exact rational
Rational prime_power_constant(const ordered_json& j, const std::string& path)
{
  int sign = need(j, "sign", path + ".").get<int>();
  if (sign != 1 && sign != -1)
    fail(path + ".sign", "must be 1 or -1");
  Rational value(sign);
  for (const auto& pe : need(j, "prime_powers", path + ".")) {
    if (!pe.is_array() || pe.size() != 2)
      fail(path + ".prime_powers", "entries must be [prime, exponent]");
    long p = pe.at(0).get<long>();
    long e = pe.at(1).get<long>();
    value *= rational_pow(Rational(p), e);
  }
  return value;
}

ordered_json prime_powers_json(int sign, std::vector<std::pair<long, long>> pows)
{
  ordered_json j;
  j["sign"] = sign;
  j["prime_powers"] = ordered_json::array();
  for (auto [p, e] : pows)
    j["prime_powers"].push_back({p, e});
  return j;
}

UniPoly unipoly_field(const ordered_json& j, const std::string& path)
{
  if (!j.is_array())
    fail(path, "expected an array of rational strings (ascending exponent)");
  std::vector<Rational> coeffs;
  for (size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(rational_field(j.at(i), path + "[" + std::to_string(i) + "]"));
  return UniPoly(std::move(coeffs));
}

ordered_json unipoly_json(const UniPoly& f)
{
  ordered_json arr = ordered_json::array();
  for (const auto& c : f.coeffs())
    arr.push_back(rational_str(c));
  return arr;
}

// Array of a-coefficient arrays, index = power of X (or t).
BiPoly bipoly_field(const ordered_json& j, const std::string& path)
{
  if (!j.is_array())
    fail(path, "expected an array of coefficient arrays");
  std::vector<RatFunc> coeffs;
  for (size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(RatFunc::from_poly(unipoly_field(j.at(i), path + "[" + std::to_string(i) + "]")));
  return BiPoly(std::move(coeffs));
}

ordered_json bipoly_json(const BiPoly& f, const std::string& context)
{
  ordered_json arr = ordered_json::array();
  for (const auto& c : f.x_coeffs()) {
    if (!c.is_polynomial())
      throw std::runtime_error("constants file: " + context + " has a non-polynomial coefficient");
    arr.push_back(unipoly_json(c.num()));
  }
  return arr;
}

}  // namespace

ConstantsFile ConstantsFile::from_json(const ordered_json& j)
{
  ConstantsFile c;
  const auto& conv = need(j, "conventions", "");
  c.composition_convention = need(conv, "composition", "conventions.").get<std::string>();
  if (c.composition_convention != "apply-left-first")
    fail("conventions.composition", "unsupported convention '" + c.composition_convention + "'");

  const auto& belyi = need(j, "belyi", "");
  c.x_text = need(belyi, "x", "belyi.").get<std::string>();
  c.z_text = need(belyi, "z", "belyi.").get<std::string>();
  try {
    c.x = Perm::parse_cycles(c.x_text, 72);
    c.z = Perm::parse_cycles(c.z_text, 72);
  } catch (const std::exception& e) {
    fail("belyi.x/z", e.what());
  }
  if (c.x.cycle_str() != c.x_text)
    fail("belyi.x", "not in normalized cycle form");
  if (c.z.cycle_str() != c.z_text)
    fail("belyi.z", "not in normalized cycle form");

  c.belyi_scale = prime_power_constant(need(belyi, "scale", "belyi."), "belyi.scale");
  c.one_fiber_shift = rational_field(need(belyi, "one_fiber_shift", "belyi."), "belyi.one_fiber_shift");
  if (c.one_fiber_shift != Rational(-1) / c.belyi_scale)
    fail("belyi.one_fiber_shift", "must equal -1/scale");

  auto load_uni_factors = [&](const ordered_json& arr, const std::string& path) {
    std::vector<std::pair<UniPoly, int>> out;
    for (size_t i = 0; i < arr.size(); ++i) {
      const auto& f = arr.at(i);
      std::string p = path + "[" + std::to_string(i) + "]";
      out.emplace_back(unipoly_field(need(f, "coeffs", p + "."), p + ".coeffs"),
                       need(f, "exp", p + ".").get<int>());
    }
    return out;
  };
  c.belyi_p_factors = load_uni_factors(need(belyi, "p_factors", "belyi."), "belyi.p_factors");
  c.belyi_q_factors = load_uni_factors(need(belyi, "q_factors", "belyi."), "belyi.q_factors");
  c.belyi_p = UniPoly::constant(Rational(1));
  for (const auto& [base, exp] : c.belyi_p_factors)
    c.belyi_p = c.belyi_p * base.pow(exp);
  c.belyi_q = UniPoly::constant(Rational(1));
  for (const auto& [base, exp] : c.belyi_q_factors)
    c.belyi_q = c.belyi_q * base.pow(exp);
  if (c.belyi_p.degree() != 72)
    fail("belyi.p_factors", "expanded degree is not 72");
  if (c.belyi_q.degree() != 68)
    fail("belyi.q_factors", "expanded degree is not 68");

  const auto& family = need(j, "family", "");
  auto load_bi_factors = [&](const ordered_json& arr, const std::string& path) {
    std::vector<std::pair<BiPoly, int>> out;
    for (size_t i = 0; i < arr.size(); ++i) {
      const auto& f = arr.at(i);
      std::string p = path + "[" + std::to_string(i) + "]";
      out.emplace_back(bipoly_field(need(f, "coeffs_x", p + "."), p + ".coeffs_x"),
                       need(f, "exp", p + ".").get<int>());
    }
    return out;
  };
  c.family_p_factors = load_bi_factors(need(family, "p_factors", "family."), "family.p_factors");
  c.family_q_factors = load_bi_factors(need(family, "q_factors", "family."), "family.q_factors");
  c.family_p = BiPoly::constant(RatFunc::constant(Rational(1)));
  for (const auto& [base, exp] : c.family_p_factors)
    c.family_p = c.family_p * base.pow(exp);
  c.family_q = BiPoly::constant(RatFunc::constant(Rational(1)));
  for (const auto& [base, exp] : c.family_q_factors)
    c.family_q = c.family_q * base.pow(exp);
  if (c.family_p.x_degree() != 36)
    fail("family.p_factors", "expanded X-degree is not 36");
  if (c.family_q.x_degree() != 34)
    fail("family.q_factors", "expanded X-degree is not 34");

  const auto& delta = need(j, "delta", "");
  c.delta.constant = prime_power_constant(need(delta, "constant", "delta."), "delta.constant");
  const auto& dfs = need(delta, "factors", "delta.");
  for (size_t i = 0; i < dfs.size(); ++i) {
    const auto& f = dfs.at(i);
    std::string p = "delta.factors[" + std::to_string(i) + "]";
    c.delta.factors.emplace_back(bipoly_field(need(f, "t_coeffs", p + "."), p + ".t_coeffs"),
                                 need(f, "exp", p + ".").get<long>());
  }
  if (c.delta.factors.empty())
    fail("delta.factors", "empty");
  return c;
}

ConstantsFile ConstantsFile::load(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("constants file: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      if (text[i] == '\n')
        ++line;
    throw std::runtime_error("constants file: parse error at line " + std::to_string(line) + ": " +
                             e.what());
  }
  return from_json(j);
}

ordered_json ConstantsFile::to_json() const
{
  ordered_json j;
  j["conventions"]["composition"] = composition_convention;
  j["conventions"]["points"] = "1-based";
  ordered_json belyi;
  belyi["x"] = x_text;
  belyi["z"] = z_text;
  // scale and constant keep their printed prime-power shape
  belyi["scale"] = prime_powers_json(sgn(belyi_scale), [&] {
    std::vector<std::pair<long, long>> pows;
    Rational mag = abs(belyi_scale);
    Integer den = mag.get_den();
    for (long p : {2L, 3L}) {
      long e = 0;
      while (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
        den /= p;
        --e;
      }
      if (e != 0)
        pows.emplace_back(p, e);
    }
    return pows;
  }());
  belyi["one_fiber_shift"] = rational_str(one_fiber_shift);
  auto uni_factors_json = [](const std::vector<std::pair<UniPoly, int>>& factors) {
    ordered_json arr = ordered_json::array();
    for (const auto& [base, exp] : factors) {
      ordered_json f;
      f["coeffs"] = unipoly_json(base);
      f["exp"] = exp;
      arr.push_back(std::move(f));
    }
    return arr;
  };
  belyi["p_factors"] = uni_factors_json(belyi_p_factors);
  belyi["q_factors"] = uni_factors_json(belyi_q_factors);
  j["belyi"] = std::move(belyi);

  ordered_json family;
  auto bi_factors_json = [](const std::vector<std::pair<BiPoly, int>>& factors,
                            const std::string& ctx) {
    ordered_json arr = ordered_json::array();
    for (const auto& [base, exp] : factors) {
      ordered_json f;
      f["coeffs_x"] = bipoly_json(base, ctx);
      f["exp"] = exp;
      arr.push_back(std::move(f));
    }
    return arr;
  };
  family["p_factors"] = bi_factors_json(family_p_factors, "family.p_factors");
  family["q_factors"] = bi_factors_json(family_q_factors, "family.q_factors");
  j["family"] = std::move(family);

  ordered_json delta_j;
  delta_j["constant"] = prime_powers_json(sgn(delta.constant), [&] {
    std::vector<std::pair<long, long>> pows;
    Rational mag = abs(delta.constant);
    Integer num = mag.get_num();
    for (long p : {2L, 3L}) {
      long e = 0;
      while (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p))) {
        num /= p;
        ++e;
      }
      if (e != 0)
        pows.emplace_back(p, e);
    }
    return pows;
  }());
  delta_j["factors"] = ordered_json::array();
  for (const auto& [base, exp] : delta.factors) {
    ordered_json f;
    f["t_coeffs"] = bipoly_json(base, "delta.factors");
    f["exp"] = exp;
    delta_j["factors"].push_back(std::move(f));
  }
  j["delta"] = std::move(delta_j);
  return j;
}

}  // namespace sp62v
