#include "sp62v/cycle_type.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sp62v {

CycleType::CycleType(std::vector<std::pair<int, int>> parts) : parts_(std::move(parts))
{
  std::map<int, int> agg;
  for (auto [len, cnt] : parts_) {
    if (len < 1 || cnt < 1)
      throw std::invalid_argument("cycle type parts must be positive");
    agg[len] += cnt;
  }
  parts_.assign(agg.begin(), agg.end());
}

CycleType CycleType::from_lengths(const std::vector<int>& lengths)
{
  std::map<int, int> agg;
  for (int l : lengths) {
    if (l < 1)
      throw std::invalid_argument("cycle length must be positive");
    agg[l]++;
  }
  CycleType t;
  t.parts_.assign(agg.begin(), agg.end());
  return t;
}

CycleType CycleType::parse(const std::string& text)
{
  std::string s = text;
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  std::vector<std::pair<int, int>> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (item.empty())
      throw std::invalid_argument("bad cycle type: '" + text + "'");
    size_t caret = item.find('^');
    int len, cnt = 1;
    try {
      if (caret == std::string::npos) {
        len = std::stoi(item);
      } else {
        len = std::stoi(item.substr(0, caret));
        cnt = std::stoi(item.substr(caret + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad cycle type: '" + text + "'");
    }
    parts.emplace_back(len, cnt);
  }
  if (parts.empty())
    throw std::invalid_argument("empty cycle type");
  return CycleType(std::move(parts));
}

int CycleType::weight() const
{
  int w = 0;
  for (auto [len, cnt] : parts_)
    w += len * cnt;
  return w;
}

int CycleType::count_of(int length) const
{
  for (auto [len, cnt] : parts_)
    if (len == length)
      return cnt;
  return 0;
}

std::string CycleType::str() const
{
  std::ostringstream os;
  bool first = true;
  for (auto [len, cnt] : parts_) {
    if (!first)
      os << ".";
    first = false;
    os << len;
    if (cnt > 1)
      os << "^" << cnt;
  }
  return os.str();
}

}  // namespace sp62v
