#include "sp62v/census.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

namespace sp62v {

void ElementStore::push(const Perm& g)
{
  flat_.insert(flat_.end(), g.images().begin(), g.images().end());
}

std::span<const uint8_t> ElementStore::view(size_t i) const
{
  return {flat_.data() + i * static_cast<size_t>(degree_), static_cast<size_t>(degree_)};
}

Perm ElementStore::get(size_t i) const
{
  auto v = view(i);
  return Perm(std::vector<uint8_t>(v.begin(), v.end()));
}

namespace {

int compare_bytes(std::span<const uint8_t> a, const uint8_t* b, int n)
{
  return std::memcmp(a.data(), b, static_cast<size_t>(n));
}

// Binary search for key among store indices sorted by image bytes.
long find_sorted(const ElementStore& store, const std::vector<uint32_t>& sorted_idx,
                 const uint8_t* key)
{
  long lo = 0, hi = static_cast<long>(sorted_idx.size()) - 1;
  while (lo <= hi) {
    long mid = (lo + hi) / 2;
    int c = compare_bytes(store.view(sorted_idx[static_cast<size_t>(mid)]), key, store.degree());
    if (c == 0)
      return mid;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return -1;
}

}  // namespace

GroupCensus GroupCensus::build(const StabilizerChain& chain, const std::vector<Perm>& gens,
                               uint64_t bound)
{
  if (chain.order() > static_cast<unsigned long>(bound))
    throw std::invalid_argument("group too large to enumerate");
  GroupCensus census;
  census.order_ = chain.order().get_ui();
  census.store_ = ElementStore(chain.degree());
  chain.for_each_element([&](const Perm& g) { census.store_.push(g); });

  const ElementStore& store = census.store_;
  const size_t n_elems = store.size();
  const int degree = store.degree();

  // Bucket by cycle type.
  std::map<CycleType, std::vector<uint32_t>> buckets;
  {
    std::vector<bool> seen(static_cast<size_t>(degree));
    for (size_t e = 0; e < n_elems; ++e) {
      auto img = store.view(e);
      std::fill(seen.begin(), seen.end(), false);
      std::vector<int> lengths;
      for (int i = 0; i < degree; ++i) {
        if (seen[static_cast<size_t>(i)])
          continue;
        int len = 0, j = i;
        do {
          seen[static_cast<size_t>(j)] = true;
          j = img[static_cast<size_t>(j)];
          ++len;
        } while (j != i);
        lengths.push_back(len);
      }
      buckets[CycleType::from_lengths(lengths)].push_back(static_cast<uint32_t>(e));
    }
  }

  // Conjugator images: closure under x -> g * x * g^-1 for the generators
  // alone reaches the whole class (each generator permutes the finite orbit).
  std::vector<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>> conj;
  for (const Perm& g : gens) {
    if (!g.is_identity())
      conj.emplace_back(g.images(), g.inverse().images());
  }

  std::vector<uint8_t> scratch(static_cast<size_t>(degree));
  for (auto& [type, idxs] : buckets) {
    std::sort(idxs.begin(), idxs.end(), [&](uint32_t a, uint32_t b) {
      return compare_bytes(store.view(a), store.view(b).data(), degree) < 0;
    });
    std::vector<bool> visited(idxs.size(), false);
    for (size_t start = 0; start < idxs.size(); ++start) {
      if (visited[start])
        continue;
      ConjClass cls;
      cls.type = type;
      cls.rep = store.get(idxs[start]);
      std::vector<uint32_t> frontier{static_cast<uint32_t>(start)};
      visited[start] = true;
      std::vector<uint32_t> members{static_cast<uint32_t>(start)};
      while (!frontier.empty()) {
        uint32_t cur = frontier.back();
        frontier.pop_back();
        auto x = store.view(idxs[cur]);
        for (const auto& [g, ginv] : conj) {
          for (int pt = 0; pt < degree; ++pt)
            scratch[static_cast<size_t>(pt)] = ginv[x[g[static_cast<size_t>(pt)]]];
          long at = find_sorted(store, idxs, scratch.data());
          if (at < 0)
            throw std::logic_error("conjugate left its cycle-type bucket");
          if (!visited[static_cast<size_t>(at)]) {
            visited[static_cast<size_t>(at)] = true;
            frontier.push_back(static_cast<uint32_t>(at));
            members.push_back(static_cast<uint32_t>(at));
          }
        }
      }
      std::sort(members.begin(), members.end());
      cls.members.reserve(members.size());
      for (uint32_t m : members)
        cls.members.push_back(idxs[m]);  // idxs sorted by bytes, so members stay byte-sorted
      cls.size = cls.members.size();
      census.classes_.push_back(std::move(cls));
    }
  }
  std::sort(census.classes_.begin(), census.classes_.end(),
            [](const ConjClass& a, const ConjClass& b) {
              if (a.type != b.type)
                return a.type < b.type;
              return a.rep < b.rep;
            });
  return census;
}

Perm GroupCensus::member(size_t class_idx, size_t i) const
{
  return store_.get(classes_[class_idx].members[i]);
}

std::vector<size_t> GroupCensus::classes_of_type(const CycleType& t) const
{
  std::vector<size_t> out;
  for (size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].type == t)
      out.push_back(i);
  return out;
}

size_t GroupCensus::class_of(const Perm& g) const
{
  CycleType t = cycle_type(g);
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].type == t && same_class(g, i))
      return i;
  }
  throw std::invalid_argument("element not found in census");
}

bool GroupCensus::same_class(const Perm& g, size_t class_idx) const
{
  const auto& members = classes_[class_idx].members;
  return find_sorted(store_, members, g.images().data()) >= 0;
}

std::vector<CycleType> GroupCensus::distinct_types() const
{
  std::vector<CycleType> out;
  for (const auto& c : classes_)
    if (out.empty() || !(out.back() == c.type))
      out.push_back(c.type);
  return out;
}

GroupCensus::FixStats GroupCensus::fix_statistics() const
{
  FixStats st;
  const int degree = store_.degree();
  for (size_t e = 0; e < store_.size(); ++e) {
    auto img = store_.view(e);
    uint64_t fix = 0;
    for (int i = 0; i < degree; ++i)
      if (img[static_cast<size_t>(i)] == i)
        ++fix;
    st.sum_fix += fix;
    st.sum_fix2 += fix * fix;
  }
  return st;
}

std::vector<Perm> alternating_generators(int n)
{
  if (n < 3)
    throw std::invalid_argument("alternating group needs n >= 3");
  std::vector<uint8_t> three(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    three[static_cast<size_t>(i)] = static_cast<uint8_t>(i);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<uint8_t> cyc(static_cast<size_t>(n));
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i)
      cyc[static_cast<size_t>(i)] = static_cast<uint8_t>((i + 1) % n);
  } else {
    cyc[0] = 0;
    for (int i = 1; i < n; ++i)
      cyc[static_cast<size_t>(i)] = static_cast<uint8_t>(i == n - 1 ? 1 : i + 1);
  }
  return {Perm(std::move(three)), Perm(std::move(cyc))};
}

int min_faithful_degree_check(int n)
{
  if (n < 5 || n > 7)
    throw std::invalid_argument("supported range is n = 5..7");
  auto gens = alternating_generators(n);
  StabilizerChain chain = StabilizerChain::build(gens);
  Integer expected = 1;
  for (int i = 2; i <= n; ++i)
    expected *= i;
  expected /= 2;
  if (chain.order() != expected)
    throw std::logic_error("alternating generators give the wrong order");
  const uint64_t order = chain.order().get_ui();

  GroupCensus census = GroupCensus::build(chain, gens, order);

  // Exhaustive search for a normal subgroup as a conjugation-closed union of
  // classes: a class-union of compatible size closing to a subgroup would be
  // one, and every normal subgroup is of this shape.
  size_t id_class = census.class_of(Perm::identity(n));
  std::vector<size_t> others;
  for (size_t i = 0; i < census.classes().size(); ++i)
    if (i != id_class)
      others.push_back(i);
  for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << others.size()); ++mask) {
    uint64_t total = 1;
    for (size_t b = 0; b < others.size(); ++b)
      if (mask & (uint64_t(1) << b))
        total += census.classes()[others[b]].size;
    if (total <= 1 || total >= order || order % total != 0)
      continue;
    std::vector<Perm> subset_elems;
    for (size_t b = 0; b < others.size(); ++b) {
      if (!(mask & (uint64_t(1) << b))) {
        continue;
      }
      const auto& cls = census.classes()[others[b]];
      for (size_t m = 0; m < cls.members.size(); ++m)
        subset_elems.push_back(census.member(others[b], m));
    }
    StabilizerChain generated = StabilizerChain::build(subset_elems);
    if (generated.order() == Integer(static_cast<unsigned long>(total)))
      throw std::logic_error("A_n unexpectedly has a proper normal subgroup");
  }

  // Simplicity in hand: a proper index-d subgroup has trivial core, so A_n
  // embeds into S_d; |A_n| > d! rules out every d < n.
  Integer dfact = 1;
  for (int d = 1; d < n; ++d) {
    dfact *= d;
    if (d >= 2 && !(Integer(static_cast<unsigned long>(order)) > dfact))
      throw std::logic_error("embedding bound failed");
  }

  // Existence at index n: the natural action is transitive, so a point
  // stabilizer has index exactly n by orbit-stabilizer.
  if (chain.first_orbit_size() != n)
    throw std::logic_error("natural action is not transitive");
  return n;
}

}  // namespace sp62v
