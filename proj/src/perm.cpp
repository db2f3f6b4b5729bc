#include "sp62v/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sp62v {

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images))
{
  if (img_.size() > 255)
    throw std::invalid_argument("degree above 255 not supported");
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n)
{
  std::vector<uint8_t> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const
{
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

Perm Perm::operator*(const Perm& o) const
{
  if (degree() != o.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const
{
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i)
    r.img_[img_[i]] = static_cast<uint8_t>(i);
  return r;
}

Perm Perm::conjugate(const Perm& x, const Perm& g)
{
  if (x.degree() != g.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  // (g * x * g^-1)(pt) = g^-1(x(g(pt)))
  Perm ginv = g.inverse();
  Perm r;
  r.img_.resize(x.img_.size());
  for (size_t i = 0; i < x.img_.size(); ++i)
    r.img_[i] = ginv.img_[x.img_[g.img_[i]]];
  return r;
}

int Perm::count_fixed() const
{
  int n = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] == i)
      ++n;
  return n;
}

CycleType cycle_type(const Perm& g)
{
  std::vector<bool> seen(static_cast<size_t>(g.degree()), false);
  std::vector<int> lengths;
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[static_cast<size_t>(i)])
      continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = g[j];
      ++len;
    } while (j != i);
    lengths.push_back(len);
  }
  return CycleType::from_lengths(lengths);
}

std::string Perm::cycle_str() const
{
  std::vector<bool> seen(img_.size(), false);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) {
      seen[static_cast<size_t>(i)] = true;
      continue;
    }
    any = true;
    os << "(";
    int j = i;
    bool first = true;
    do {
      if (!first)
        os << ", ";
      first = false;
      os << (j + 1);
      seen[static_cast<size_t>(j)] = true;
      j = img_[static_cast<size_t>(j)];
    } while (j != i);
    os << ")";
  }
  return any ? os.str() : "()";
}

Perm Perm::parse_cycles(const std::string& text, int degree)
{
  std::vector<uint8_t> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i)
    img[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  std::vector<bool> used(static_cast<size_t>(degree), false);

  size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n' || text[pos] == '\t'))
      ++pos;
  };
  skip_ws();
  if (pos < text.size() && text.compare(pos, 2, "()") == 0)
    pos += 2;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size())
      break;
    if (text[pos] != '(')
      throw std::invalid_argument("cycle notation: expected '(' in '" + text + "'");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos)
        throw std::invalid_argument("cycle notation: expected point number");
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 1 || pt > degree)
        throw std::invalid_argument("cycle notation: point out of range");
      if (used[static_cast<size_t>(pt - 1)])
        throw std::invalid_argument("cycle notation: repeated point");
      used[static_cast<size_t>(pt - 1)] = true;
      cycle.push_back(pt - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("cycle notation: expected ',' or ')'");
    }
    if (cycle.size() < 2)
      throw std::invalid_argument("cycle notation: singleton cycle");
    for (size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<size_t>(cycle[k])] =
          static_cast<uint8_t>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return Perm(std::move(img));
}

size_t PermHash::operator()(const Perm& p) const
{
  // FNV-1a over the image bytes.
  size_t h = 1469598103934665603ull;
  for (uint8_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sp62v
