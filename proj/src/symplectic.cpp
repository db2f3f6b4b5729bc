#include "sp62v/symplectic.hpp"

#include <bit>
#include <stdexcept>

namespace sp62v {

BinMatrix BinMatrix::identity()
{
  BinMatrix m;
  for (int r = 0; r < 6; ++r)
    m.rows[static_cast<size_t>(r)] = static_cast<uint8_t>(1 << r);
  return m;
}

uint8_t BinMatrix::apply(uint8_t v) const
{
  uint8_t out = 0;
  for (int r = 0; r < 6; ++r)
    out |= static_cast<uint8_t>((std::popcount(static_cast<unsigned>(rows[static_cast<size_t>(r)] & v)) & 1) << r);
  return out;
}

BinMatrix BinMatrix::operator*(const BinMatrix& o) const
{
  // Column c of the product is this->apply(column c of o).
  BinMatrix r;
  for (int c = 0; c < 6; ++c) {
    uint8_t col = 0;
    for (int i = 0; i < 6; ++i)
      col |= static_cast<uint8_t>(((o.rows[static_cast<size_t>(i)] >> c) & 1) << i);
    uint8_t img = apply(col);
    for (int i = 0; i < 6; ++i)
      r.rows[static_cast<size_t>(i)] |= static_cast<uint8_t>(((img >> i) & 1) << c);
  }
  return r;
}

BinMatrix BinMatrix::transpose() const
{
  BinMatrix t;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      t.rows[static_cast<size_t>(c)] |= static_cast<uint8_t>(((rows[static_cast<size_t>(r)] >> c) & 1) << r);
  return t;
}

BinMatrix BinMatrix::inverse() const
{
  // Gauss-Jordan on [M | I].
  std::array<uint8_t, 6> a = rows;
  std::array<uint8_t, 6> inv = identity().rows;
  for (int col = 0, row = 0; col < 6; ++col, ++row) {
    int pivot = -1;
    for (int r = row; r < 6; ++r) {
      if ((a[static_cast<size_t>(r)] >> col) & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0)
      throw std::invalid_argument("singular matrix");
    std::swap(a[static_cast<size_t>(row)], a[static_cast<size_t>(pivot)]);
    std::swap(inv[static_cast<size_t>(row)], inv[static_cast<size_t>(pivot)]);
    for (int r = 0; r < 6; ++r) {
      if (r != row && ((a[static_cast<size_t>(r)] >> col) & 1)) {
        a[static_cast<size_t>(r)] ^= a[static_cast<size_t>(row)];
        inv[static_cast<size_t>(r)] ^= inv[static_cast<size_t>(row)];
      }
    }
  }
  BinMatrix out;
  out.rows = inv;
  return out;
}

uint8_t symplectic_pairing(uint8_t u, uint8_t v)
{
  uint8_t swapped = static_cast<uint8_t>(((v >> 3) | (v << 3)) & 0x3f);
  return static_cast<uint8_t>(std::popcount(static_cast<unsigned>(u & swapped)) & 1);
}

bool is_symplectic(const BinMatrix& m)
{
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      uint8_t ei = static_cast<uint8_t>(1 << i), ej = static_cast<uint8_t>(1 << j);
      if (symplectic_pairing(m.apply(ei), m.apply(ej)) != symplectic_pairing(ei, ej))
        return false;
    }
  }
  return true;
}

BinMatrix transvection(uint8_t w)
{
  BinMatrix m;
  for (int c = 0; c < 6; ++c) {
    uint8_t ec = static_cast<uint8_t>(1 << c);
    uint8_t img = static_cast<uint8_t>(ec ^ (symplectic_pairing(ec, w) ? w : 0));
    for (int r = 0; r < 6; ++r)
      m.rows[static_cast<size_t>(r)] |= static_cast<uint8_t>(((img >> r) & 1) << c);
  }
  return m;
}

uint8_t form_eval(uint64_t table, uint8_t x)
{
  return static_cast<uint8_t>((table >> x) & 1);
}

std::vector<uint64_t> polarizing_forms()
{
  // Base form Q0(x) = x0 x3 + x1 x4 + x2 x5 polarizes to the pairing; the
  // other polarizing forms differ from it by a linear functional.
  uint64_t q0 = 0;
  for (int x = 0; x < 64; ++x) {
    uint8_t b = static_cast<uint8_t>(x);
    uint8_t val = static_cast<uint8_t>(((b >> 0) & (b >> 3) & 1) ^ ((b >> 1) & (b >> 4) & 1) ^
                                       ((b >> 2) & (b >> 5) & 1));
    q0 |= static_cast<uint64_t>(val) << x;
  }
  std::vector<uint64_t> forms;
  forms.reserve(64);
  for (int c = 0; c < 64; ++c) {
    uint64_t t = q0;
    for (int x = 0; x < 64; ++x) {
      uint8_t lin = static_cast<uint8_t>(std::popcount(static_cast<unsigned>(c & x)) & 1);
      t ^= static_cast<uint64_t>(lin) << x;
    }
    forms.push_back(t);
  }
  for (uint64_t t : forms) {
    for (int u = 0; u < 64; ++u)
      for (int v = 0; v < 64; ++v) {
        uint8_t pol = static_cast<uint8_t>(form_eval(t, static_cast<uint8_t>(u ^ v)) ^
                                           form_eval(t, static_cast<uint8_t>(u)) ^
                                           form_eval(t, static_cast<uint8_t>(v)));
        if (pol != symplectic_pairing(static_cast<uint8_t>(u), static_cast<uint8_t>(v)))
          throw std::logic_error("form fails the polarization identity");
      }
  }
  return forms;
}

int arf_invariant(uint64_t table)
{
  int arf = 0;
  for (int i = 0; i < 3; ++i) {
    uint8_t e = static_cast<uint8_t>(1 << i), f = static_cast<uint8_t>(1 << (i + 3));
    arf ^= form_eval(table, e) & form_eval(table, f);
  }
  return arf;
}

int arf_with_basis(uint64_t table, const std::array<std::pair<uint8_t, uint8_t>, 3>& basis)
{
  int arf = 0;
  for (const auto& [e, f] : basis)
    arf ^= form_eval(table, e) & form_eval(table, f);
  return arf;
}

Perm action_on_points(const BinMatrix& m)
{
  if (!is_symplectic(m))
    throw std::invalid_argument("matrix does not preserve the symplectic form");
  std::vector<uint8_t> img(63);
  for (int v = 1; v <= 63; ++v)
    img[static_cast<size_t>(v - 1)] = static_cast<uint8_t>(m.apply(static_cast<uint8_t>(v)) - 1);
  return Perm(std::move(img));
}

Perm action_on_forms(const BinMatrix& m, const std::vector<uint64_t>& arf0_forms)
{
  if (!is_symplectic(m))
    throw std::invalid_argument("matrix does not preserve the symplectic form");
  BinMatrix minv = m.inverse();
  std::vector<uint8_t> img(arf0_forms.size());
  for (size_t i = 0; i < arf0_forms.size(); ++i) {
    uint64_t moved = 0;
    for (int x = 0; x < 64; ++x)
      moved |= static_cast<uint64_t>(form_eval(arf0_forms[i], minv.apply(static_cast<uint8_t>(x)))) << x;
    size_t at = arf0_forms.size();
    for (size_t j = 0; j < arf0_forms.size(); ++j) {
      if (arf0_forms[j] == moved) {
        at = j;
        break;
      }
    }
    if (at == arf0_forms.size())
      throw std::logic_error("form image left the Arf-0 orbit");
    img[i] = static_cast<uint8_t>(at);
  }
  return Perm(std::move(img));
}

Sp62Model build_sp62_model()
{
  Sp62Model model;
  // Transvection seeds: every w of Hamming weight <= 2.
  std::vector<uint8_t> seeds;
  for (int w = 1; w < 64; ++w)
    if (std::popcount(static_cast<unsigned>(w)) <= 2)
      seeds.push_back(static_cast<uint8_t>(w));

  auto order_of = [](const std::vector<BinMatrix>& mats) {
    std::vector<Perm> ps;
    ps.reserve(mats.size());
    for (const auto& m : mats)
      ps.push_back(action_on_points(m));
    return StabilizerChain::build(ps).order();
  };

  // Greedy grow until the full order is reached, then greedy shrink.
  const Integer target(static_cast<unsigned long>(kSp62Order));
  std::vector<BinMatrix> picked;
  for (uint8_t w : seeds) {
    picked.push_back(transvection(w));
    if (order_of(picked) == target)
      break;
  }
  if (order_of(picked) != target)
    throw std::logic_error("weight-2 transvection seeds fail to generate; extend the seed set");
  for (size_t i = picked.size(); i-- > 0;) {
    if (picked.size() <= 2)
      break;
    std::vector<BinMatrix> without = picked;
    without.erase(without.begin() + static_cast<long>(i));
    if (order_of(without) == target)
      picked = std::move(without);
  }
  model.generators = picked;
  for (const auto& m : model.generators) {
    if (!is_symplectic(m))
      throw std::logic_error("generator fails the symplectic check");
    model.gens63.push_back(action_on_points(m));
  }
  model.chain63 = StabilizerChain::build(model.gens63);
  if (model.chain63.order() != target)
    throw std::logic_error("63-point action has the wrong order");

  model.all_forms = polarizing_forms();
  for (uint64_t t : model.all_forms)
    if (arf_invariant(t) == 0)
      model.arf0_forms.push_back(t);
  if (model.arf0_forms.size() != 36)
    throw std::logic_error("Arf-0 form count is not 36");
  for (const auto& m : model.generators)
    model.gens36.push_back(action_on_forms(m, model.arf0_forms));
  model.chain36 = StabilizerChain::build(model.gens36);
  if (model.chain36.order() != target)
    throw std::logic_error("36-point action is not faithful of full order");
  return model;
}

ClassVectorHandles locate_class_vector(const GroupCensus& census)
{
  auto find_unique = [&](const char* text) {
    CycleType t = CycleType::parse(text);
    auto hits = census.classes_of_type(t);
    if (hits.size() != 1)
      throw std::runtime_error(std::string("class vector mismatch with expected data: type ") +
                               text + " hits " + std::to_string(hits.size()) + " classes");
    return hits[0];
  };
  ClassVectorHandles h{};
  h.c1 = find_unique("3^12");
  h.c2 = find_unique("1^12.2^12");
  h.c3 = find_unique("1^6.2.4^7");
  return h;
}

}  // namespace sp62v
