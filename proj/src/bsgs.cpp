#include "sp62v/bsgs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sp62v {

namespace {

int first_moved(const Perm& g)
{
  for (int i = 0; i < g.degree(); ++i)
    if (g[i] != i)
      return i;
  return -1;
}

}  // namespace

void StabilizerChain::recompute_orbit(size_t k)
{
  Level& lv = levels_[k];
  lv.orbit.clear();
  lv.slot.assign(static_cast<size_t>(degree_), -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.slot[static_cast<size_t>(lv.base_point)] = 0;
  lv.transversal.push_back(Perm::identity(degree_));
  for (size_t oi = 0; oi < lv.orbit.size(); ++oi) {
    for (const Perm& s : lv.gens) {
      int gamma = s[lv.orbit[oi]];
      if (lv.slot[static_cast<size_t>(gamma)] < 0) {
        lv.slot[static_cast<size_t>(gamma)] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(gamma);
        lv.transversal.push_back(lv.transversal[oi] * s);
      }
    }
  }
}

std::pair<Perm, size_t> StabilizerChain::sift_from(const Perm& g, size_t k) const
{
  Perm h = g;
  for (size_t i = k; i < levels_.size(); ++i) {
    if (h.is_identity())
      return {h, i};
    const Level& lv = levels_[i];
    int beta = h[lv.base_point];
    int slot = lv.slot[static_cast<size_t>(beta)];
    if (slot < 0)
      return {h, i};
    h = h * lv.transversal[static_cast<size_t>(slot)].inverse();
  }
  return {h, levels_.size()};
}

void StabilizerChain::complete_level(size_t k)
{
  recompute_orbit(k);
  // levels_ may grow (and relocate) inside the loop; index, never hold a
  // reference across the mutation. Level k itself is not modified here.
  for (size_t oi = 0; oi < levels_[k].orbit.size(); ++oi) {
    for (size_t si = 0; si < levels_[k].gens.size(); ++si) {
      // Schreier generator u_beta * s * u_{s(beta)}^{-1}; fixes the base point.
      const Perm s = levels_[k].gens[si];
      int gamma = s[levels_[k].orbit[oi]];
      Perm sg = (levels_[k].transversal[oi] * s) *
                levels_[k].transversal[static_cast<size_t>(levels_[k].slot[static_cast<size_t>(gamma)])]
                    .inverse();
      if (sg.is_identity())
        continue;
      auto [res, j] = sift_from(sg, k + 1);
      if (res.is_identity())
        continue;
      if (j == levels_.size()) {
        Level fresh;
        fresh.base_point = first_moved(res);
        levels_.push_back(std::move(fresh));
      }
      for (size_t m = k + 1; m <= j; ++m)
        levels_[m].gens.push_back(res);
      // Re-establish closure bottom-up on every level that gained a generator.
      for (size_t m = j + 1; m-- > k + 1;)
        complete_level(m);
    }
  }
}

StabilizerChain StabilizerChain::build(const std::vector<Perm>& gens)
{
  if (gens.empty())
    throw std::invalid_argument("empty generator list");
  StabilizerChain c;
  c.degree_ = gens[0].degree();
  std::vector<Perm> nontrivial;
  for (const Perm& g : gens) {
    if (g.degree() != c.degree_)
      throw std::invalid_argument("generators of mixed degree");
    if (!g.is_identity())
      nontrivial.push_back(g);
  }
  c.order_ = 1;
  if (nontrivial.empty())
    return c;  // trivial group, no levels
  Level top;
  top.base_point = first_moved(nontrivial[0]);
  top.gens = nontrivial;
  c.levels_.push_back(std::move(top));
  c.complete_level(0);
  for (const Level& lv : c.levels_) {
    c.base_.push_back(lv.base_point);
    c.order_ *= static_cast<unsigned long>(lv.orbit.size());
  }
  return c;
}

bool StabilizerChain::contains(const Perm& g) const
{
  if (g.degree() != degree_)
    return false;
  if (levels_.empty())
    return g.is_identity();
  auto [res, lvl] = sift_from(g, 0);
  return res.is_identity();
}

int StabilizerChain::first_orbit_size() const
{
  if (levels_.empty())
    return 1;
  return static_cast<int>(levels_[0].orbit.size());
}

void StabilizerChain::enumerate_rec(size_t k, const Perm& right,
                                    const std::function<void(const Perm&)>& fn) const
{
  if (k == levels_.size()) {
    fn(right);
    return;
  }
  // Elements of G^(k) decompose uniquely as h * u with h in G^(k+1) and u in
  // the level-k transversal; h * (u * right) walks the whole coset of right.
  for (const Perm& u : levels_[k].transversal)
    enumerate_rec(k + 1, u * right, fn);
}

void StabilizerChain::for_each_element(const std::function<void(const Perm&)>& fn) const
{
  enumerate_rec(0, Perm::identity(degree_), fn);
}

std::vector<Perm> StabilizerChain::enumerate_elements(uint64_t bound) const
{
  if (order_ > static_cast<unsigned long>(bound))
    throw std::invalid_argument("group too large to enumerate");
  std::vector<Perm> out;
  out.reserve(order_.get_ui());
  for_each_element([&](const Perm& g) { out.push_back(g); });
  return out;
}

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree)
{
  std::vector<bool> seen(static_cast<size_t>(degree), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < degree; ++i) {
    if (seen[static_cast<size_t>(i)])
      continue;
    std::vector<int> orb{i};
    seen[static_cast<size_t>(i)] = true;
    for (size_t oi = 0; oi < orb.size(); ++oi) {
      for (const Perm& g : gens) {
        int j = g[orb[oi]];
        if (!seen[static_cast<size_t>(j)]) {
          seen[static_cast<size_t>(j)] = true;
          orb.push_back(j);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const std::vector<Perm>& gens, int degree)
{
  auto parts = orbits(gens, degree);
  return parts.size() == 1;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (a > b)
      std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

std::vector<int> normalize_partition(UnionFind& uf, int degree)
{
  std::vector<int> id(static_cast<size_t>(degree));
  std::vector<int> smallest(static_cast<size_t>(degree), -1);
  for (int i = 0; i < degree; ++i) {
    int r = uf.find(i);
    if (smallest[static_cast<size_t>(r)] < 0)
      smallest[static_cast<size_t>(r)] = i;  // points scanned in order, so this is the minimum
  }
  for (int i = 0; i < degree; ++i)
    id[static_cast<size_t>(i)] = smallest[static_cast<size_t>(uf.find(i))];
  return id;
}

}  // namespace

std::vector<int> finest_blocks_joining(const std::vector<Perm>& gens, int degree, int a, int b)
{
  UnionFind uf(degree);
  std::vector<std::pair<int, int>> queue;
  uf.unite(a, b);
  queue.emplace_back(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      int gx = g[x], gy = g[y];
      if (uf.unite(gx, gy))
        queue.emplace_back(gx, gy);
    }
  }
  return normalize_partition(uf, degree);
}

std::vector<std::vector<int>> minimal_blocks(const std::vector<Perm>& gens, int degree)
{
  if (!is_transitive(gens, degree))
    throw std::invalid_argument("block systems need a transitive action");
  std::set<std::vector<int>> candidates;
  for (int b = 1; b < degree; ++b) {
    auto part = finest_blocks_joining(gens, degree, 0, b);
    // discard the trivial one-block system
    std::set<int> ids(part.begin(), part.end());
    if (ids.size() > 1)
      candidates.insert(std::move(part));
  }
  // Keep partitions with no strictly finer nontrivial candidate.
  auto refines = [degree](const std::vector<int>& fine, const std::vector<int>& coarse) {
    // every fine block inside one coarse block
    for (int i = 0; i < degree; ++i)
      for (int j = i + 1; j < degree; ++j)
        if (fine[static_cast<size_t>(i)] == fine[static_cast<size_t>(j)] &&
            coarse[static_cast<size_t>(i)] != coarse[static_cast<size_t>(j)])
          return false;
    return true;
  };
  std::vector<std::vector<int>> out;
  for (const auto& p : candidates) {
    bool minimal = true;
    for (const auto& q : candidates) {
      if (q != p && refines(q, p) && !refines(p, q)) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.push_back(p);
  }
  return out;
}

}  // namespace sp62v
