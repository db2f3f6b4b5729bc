#include "sp62v/nielsen.hpp"

#include <algorithm>
#include <stdexcept>

#include "sp62v/bsgs.hpp"

namespace sp62v {

namespace {

// Cycle-type probe without allocating a CycleType: counts per length compared
// against the expected counts, aborting on the first impossible cycle.
bool has_cycle_type(const uint8_t* img, int n, const std::vector<int>& expected_counts)
{
  thread_local std::vector<int> remaining;
  thread_local std::vector<bool> seen;
  remaining = expected_counts;
  seen.assign(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)])
      continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = img[j];
      ++len;
    } while (j != i);
    if (len > n || remaining[static_cast<size_t>(len)] == 0)
      return false;
    --remaining[static_cast<size_t>(len)];
  }
  return true;
}

std::vector<int> counts_by_length(const CycleType& t, int n)
{
  std::vector<int> counts(static_cast<size_t>(n) + 1, 0);
  for (auto [len, cnt] : t.parts())
    counts[static_cast<size_t>(len)] = cnt;
  return counts;
}

bool commutes(const Perm& g, const Perm& x)
{
  for (int i = 0; i < g.degree(); ++i)
    if (x[g[i]] != g[x[i]])
      return false;
  return true;
}

}  // namespace

ClassTuple braid_move(const ClassTuple& t, int i, bool inverse)
{
  if (i < 1 || i > 3)
    throw std::invalid_argument("braid index out of range");
  ClassTuple r = t;
  const size_t a = static_cast<size_t>(i - 1), b = static_cast<size_t>(i);
  if (!inverse) {
    r.sigma[a] = (t.sigma[a] * t.sigma[b]) * t.sigma[a].inverse();
    r.sigma[b] = t.sigma[a];
  } else {
    r.sigma[a] = t.sigma[b];
    r.sigma[b] = (t.sigma[b].inverse() * t.sigma[a]) * t.sigma[b];
  }
  std::swap(r.cls[a], r.cls[b]);
  return r;
}

NielsenEngine::NielsenEngine(const GroupCensus& census, std::vector<Perm> group_gens)
    : census_(census), gens_(std::move(group_gens)), order_(census.order())
{
}

ClassTuple NielsenEngine::make_tuple(std::array<Perm, 4> sigma, std::array<size_t, 4> cls) const
{
  Perm prod = ((sigma[0] * sigma[1]) * sigma[2]) * sigma[3];
  if (!prod.is_identity())
    throw std::invalid_argument("tuple product is not the identity");
  for (size_t i = 0; i < 4; ++i) {
    if (!census_.same_class(sigma[i], cls[i]))
      throw std::invalid_argument("tuple entry " + std::to_string(i + 1) +
                                  " is not in its tagged class");
  }
  if (!generates_group(sigma[0], sigma[1], sigma[2]))
    throw std::invalid_argument("tuple does not generate the group");
  return ClassTuple{std::move(sigma), cls};
}

bool NielsenEngine::generates_group(const Perm& a, const Perm& b, const Perm& c) const
{
  std::vector<Perm> gens{a, b, c};
  // Cheap pre-filter: the full group is transitive.
  if (!is_transitive(gens, a.degree()))
    return false;
  return StabilizerChain::build(gens).order() == Integer(static_cast<unsigned long>(order_));
}

uint64_t NielsenEngine::tuple_centralizer_size(const ClassTuple& t) const
{
  uint64_t count = 0;
  const ElementStore& store = census_.store();
  for (size_t e = 0; e < store.size(); ++e) {
    Perm g = store.get(e);
    if (commutes(g, t.sigma[0]) && commutes(g, t.sigma[1]) && commutes(g, t.sigma[2]) &&
        commutes(g, t.sigma[3]))
      ++count;
  }
  return count;
}

NielsenEngine::CountResult NielsenEngine::count_tuples(const std::array<size_t, 4>& cls,
                                                       const Perm* sigma1_override) const
{
  const auto& classes = census_.classes();
  for (size_t c : cls)
    if (c >= classes.size())
      throw std::invalid_argument("class handle out of range");
  const Perm sigma1 = sigma1_override ? *sigma1_override : classes[cls[0]].rep;
  if (!census_.same_class(sigma1, cls[0]))
    throw std::invalid_argument("sigma1 is not in its tagged class");
  const int n = census_.degree();

  const CycleType& type4 = classes[cls[3]].type;
  const bool type4_unique = census_.classes_of_type(type4).size() == 1;
  const std::vector<int> counts4 = counts_by_length(type4, n);

  CountResult out;
  const auto& members2 = classes[cls[1]].members;
  const auto& members3 = classes[cls[2]].members;
  const ElementStore& store = census_.store();

  std::vector<uint8_t> u(static_cast<size_t>(n)), w(static_cast<size_t>(n));
  for (uint32_t m2 : members2) {
    auto s2 = store.view(m2);
    for (int i = 0; i < n; ++i)
      u[static_cast<size_t>(i)] = s2[sigma1[i]];
    for (uint32_t m3 : members3) {
      auto s3 = store.view(m3);
      for (int i = 0; i < n; ++i)
        w[static_cast<size_t>(i)] = s3[u[static_cast<size_t>(i)]];
      // sigma4 = (sigma1 sigma2 sigma3)^-1 shares the cycle type of the product.
      if (!has_cycle_type(w.data(), n, counts4))
        continue;
      Perm prod(std::vector<uint8_t>(w.begin(), w.end()));
      Perm sigma4 = prod.inverse();
      if (!type4_unique && !census_.same_class(sigma4, cls[3]))
        continue;
      ++out.raw;
      Perm sigma2 = store.get(m2), sigma3 = store.get(m3);
      if (generates_group(sigma1, sigma2, sigma3)) {
        ++out.generating;
        out.generating_tuples.push_back(
            ClassTuple{{sigma1, std::move(sigma2), std::move(sigma3), std::move(sigma4)}, cls});
      }
    }
  }
  out.nielsen_length = Rational(static_cast<unsigned long>(out.generating)) *
                       Rational(static_cast<unsigned long>(classes[cls[0]].size)) /
                       Rational(static_cast<unsigned long>(order_));
  return out;
}

const std::vector<Perm>& NielsenEngine::centralizer_of_rep(size_t cls) const
{
  auto it = centralizers_.find(cls);
  if (it != centralizers_.end())
    return it->second;
  const Perm& rep = census_.classes()[cls].rep;
  std::vector<Perm> cent;
  const ElementStore& store = census_.store();
  for (size_t e = 0; e < store.size(); ++e) {
    Perm g = store.get(e);
    if (commutes(g, rep))
      cent.push_back(std::move(g));
  }
  const uint64_t expected = order_ / census_.classes()[cls].size;
  if (cent.size() != expected)
    throw std::logic_error("centralizer size disagrees with orbit-stabilizer");
  return centralizers_.emplace(cls, std::move(cent)).first->second;
}

const std::unordered_map<Perm, Perm, PermHash>& NielsenEngine::conjugator_map(size_t cls) const
{
  auto it = conj_maps_.find(cls);
  if (it != conj_maps_.end())
    return it->second;
  // BFS over x -> s x s^-1 from the representative; map each class member y
  // to some u with u y u^-1 = rep.
  const Perm& rep = census_.classes()[cls].rep;
  std::unordered_map<Perm, Perm, PermHash> map;
  map.reserve(census_.classes()[cls].size * 2);
  std::vector<Perm> frontier{rep};
  map.emplace(rep, Perm::identity(census_.degree()));
  std::vector<std::pair<Perm, Perm>> gens_with_inv;
  for (const Perm& s : gens_)
    gens_with_inv.emplace_back(s, s.inverse());
  while (!frontier.empty()) {
    Perm y = std::move(frontier.back());
    frontier.pop_back();
    Perm uy = map.at(y);
    for (const auto& [s, sinv] : gens_with_inv) {
      Perm z = Perm::conjugate(y, s);
      if (map.find(z) == map.end()) {
        // u_z = u_y * s^-1 : (u_y s^-1) z (u_y s^-1)^-1 = u_y y u_y^-1 = rep
        map.emplace(z, uy * sinv);
        frontier.push_back(std::move(z));
      }
    }
  }
  if (map.size() != census_.classes()[cls].size)
    throw std::logic_error("conjugation closure missed part of the class");
  return conj_maps_.emplace(cls, std::move(map)).first->second;
}

ClassTuple NielsenEngine::canonicalize(const ClassTuple& t) const
{
  if (!generates_group(t.sigma[0], t.sigma[1], t.sigma[2]))
    throw std::invalid_argument("canonical form requires a generating tuple");
  const size_t c1 = t.cls[0];
  const auto& reps_map = conjugator_map(c1);
  auto it = reps_map.find(t.sigma[0]);
  if (it == reps_map.end())
    throw std::invalid_argument("sigma1 is not in its tagged class");
  const Perm& g = it->second;
  std::array<Perm, 4> moved;
  for (size_t i = 0; i < 4; ++i)
    moved[i] = Perm::conjugate(t.sigma[i], g);
  // moved[0] is now the class representative; minimize the rest over its
  // centralizer.
  const std::vector<Perm>& cent = centralizer_of_rep(c1);
  std::array<Perm, 4> best = moved;
  bool have_best = false;
  for (const Perm& c : cent) {
    Perm s2 = Perm::conjugate(moved[1], c);
    if (have_best) {
      if (best[1] < s2)
        continue;
      if (s2 < best[1]) {
        best[1] = std::move(s2);
        best[2] = Perm::conjugate(moved[2], c);
        best[3] = Perm::conjugate(moved[3], c);
        continue;
      }
      Perm s3 = Perm::conjugate(moved[2], c);
      if (best[2] < s3)
        continue;
      if (s3 < best[2]) {
        best[1] = std::move(s2);
        best[2] = std::move(s3);
        best[3] = Perm::conjugate(moved[3], c);
        continue;
      }
      Perm s4 = Perm::conjugate(moved[3], c);
      if (s4 < best[3]) {
        best[1] = std::move(s2);
        best[2] = std::move(s3);
        best[3] = std::move(s4);
      }
    } else {
      best[1] = std::move(s2);
      best[2] = Perm::conjugate(moved[2], c);
      best[3] = Perm::conjugate(moved[3], c);
      have_best = true;
    }
  }
  best[0] = moved[0];
  return ClassTuple{std::move(best), t.cls};
}

std::vector<std::vector<size_t>> NielsenEngine::braid_orbits(const std::vector<ClassTuple>& reps) const
{
  auto key_of = [](const ClassTuple& t) {
    std::vector<uint8_t> key;
    key.reserve(static_cast<size_t>(t.sigma[0].degree()) * 4 + 4);
    for (const Perm& s : t.sigma)
      key.insert(key.end(), s.images().begin(), s.images().end());
    for (size_t c : t.cls)
      key.push_back(static_cast<uint8_t>(c));
    return key;
  };

  std::map<std::vector<uint8_t>, size_t> node_id;
  std::vector<size_t> component;  // union-find parent
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (component[x] != x)
      x = component[x] = component[component[x]];
    return x;
  };

  std::vector<ClassTuple> queue;
  std::vector<size_t> rep_node(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    ClassTuple canon = canonicalize(reps[i]);
    auto key = key_of(canon);
    auto it = node_id.find(key);
    if (it == node_id.end()) {
      size_t id = component.size();
      node_id.emplace(std::move(key), id);
      component.push_back(id);
      queue.push_back(canon);
      rep_node[i] = id;
    } else {
      rep_node[i] = it->second;
    }
  }

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    ClassTuple cur = queue[qi];
    size_t cur_id = node_id.at(key_of(cur));
    for (int i = 1; i <= 3; ++i) {
      for (bool inv : {false, true}) {
        ClassTuple moved = canonicalize(braid_move(cur, i, inv));
        auto key = key_of(moved);
        auto it = node_id.find(key);
        size_t id;
        if (it == node_id.end()) {
          id = component.size();
          node_id.emplace(std::move(key), id);
          component.push_back(id);
          queue.push_back(moved);
        } else {
          id = it->second;
        }
        size_t ra = find(cur_id), rb = find(id);
        if (ra != rb)
          component[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }

  std::map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < reps.size(); ++i)
    groups[find(rep_node[i])].push_back(i);
  std::vector<std::vector<size_t>> out;
  for (auto& [root, list] : groups)
    out.push_back(std::move(list));
  return out;
}

}  // namespace sp62v
