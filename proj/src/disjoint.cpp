#include "boxkit/disjoint.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "boxkit/parallel.hpp"

namespace boxkit {

bool DisjointnessCertificate::verify(std::span<const Event> events) const {
  if (indices.size() != witnesses.size()) return false;
  CoordSet used = 0;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= events.size()) return false;
    if (used & witnesses[j]) return false;
    used |= witnesses[j];
    if (!events[indices[j]].is_witness(outcome_index, witnesses[j])) return false;
  }
  return true;
}

namespace {

struct PackSearch {
  std::span<const std::vector<CoordSet>> families;
  std::vector<std::size_t> order;
  int best = 0;

  void dfs(std::size_t pos, CoordSet used, int count) {
    best = std::max(best, count);
    if (pos == order.size()) return;
    if (count + static_cast<int>(order.size() - pos) <= best) return;
    for (CoordSet mask : families[order[pos]])
      if ((mask & used) == 0) dfs(pos + 1, used | mask, count + 1);
    dfs(pos + 1, used, count);
  }
};

}  // namespace

int max_disjoint_pack(std::span<const std::vector<CoordSet>> families) {
  PackSearch search;
  search.families = families;
  for (std::size_t i = 0; i < families.size(); ++i)
    if (!families[i].empty()) search.order.push_back(i);
  // Fewest alternatives first: failures surface early, pruning bites sooner.
  std::sort(search.order.begin(), search.order.end(),
            [&](std::size_t a, std::size_t b) { return families[a].size() < families[b].size(); });
  search.dfs(0, 0, 0);
  return search.best;
}

namespace {

bool pack_all_rec(std::span<const std::vector<CoordSet>> families, std::size_t pos, CoordSet used,
                  std::vector<CoordSet>* chosen) {
  if (pos == families.size()) return true;
  for (CoordSet mask : families[pos]) {
    if ((mask & used) != 0) continue;
    if (chosen) chosen->push_back(mask);
    if (pack_all_rec(families, pos + 1, used | mask, chosen)) return true;
    if (chosen) chosen->pop_back();
  }
  return false;
}

}  // namespace

bool can_pack_all(std::span<const std::vector<CoordSet>> families) {
  for (const auto& f : families)
    if (f.empty()) return false;
  return pack_all_rec(families, 0, 0, nullptr);
}

std::optional<DisjointnessCertificate> box_occurs_at(std::uint64_t outcome_index,
                                                     std::span<const Event> events,
                                                     std::span<const std::size_t> index_set) {
  require_same_space(events);
  DisjointnessCertificate cert;
  cert.outcome_index = outcome_index;
  cert.indices.assign(index_set.begin(), index_set.end());
  std::sort(cert.indices.begin(), cert.indices.end());
  cert.indices.erase(std::unique(cert.indices.begin(), cert.indices.end()), cert.indices.end());
  for (std::size_t i : cert.indices)
    if (i >= events.size()) throw std::invalid_argument("event index out of range");

  std::vector<std::vector<CoordSet>> families;
  families.reserve(cert.indices.size());
  for (std::size_t i : cert.indices) {
    families.push_back(events[i].minimal_witnesses(outcome_index));
    if (families.back().empty()) return std::nullopt;
  }
  // Families are sorted ascending, and the DFS takes the first completion,
  // so the returned witness sequence is the lexicographically smallest. The
  // lex-min system always uses minimal witnesses: shrinking any component
  // keeps the system disjoint and lowers its mask.
  std::vector<CoordSet> chosen;
  if (!pack_all_rec(families, 0, 0, &chosen)) return std::nullopt;
  cert.witnesses = std::move(chosen);
  return cert;
}

Event box_event(std::span<const Event> events, std::span<const std::size_t> index_set) {
  require_same_space(events);
  if (events.empty()) throw std::invalid_argument("box_event needs a space to live on");
  const ProductSpace& space = events.front().space();
  std::vector<std::size_t> indices(index_set.begin(), index_set.end());
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (std::size_t i : indices)
    if (i >= events.size()) throw std::invalid_argument("event index out of range");

  boost::dynamic_bitset<> bits(space.outcome_count());
  std::vector<std::vector<CoordSet>> families(indices.size());
  for (std::uint64_t w = 0; w < space.outcome_count(); ++w) {
    bool feasible = true;
    for (std::size_t j = 0; j < indices.size() && feasible; ++j) {
      families[j] = events[indices[j]].minimal_witnesses(w);
      if (families[j].empty()) feasible = false;
    }
    if (feasible && can_pack_all(families)) bits.set(w);
  }
  return Event::from_bits(space, std::move(bits));
}

Event box_event(std::span<const Event> events) {
  std::vector<std::size_t> all(events.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return box_event(events, all);
}

int x_at(std::span<const Event> events, std::uint64_t outcome_index) {
  require_same_space(events);
  std::vector<std::vector<CoordSet>> families;
  families.reserve(events.size());
  for (const Event& e : events) families.push_back(e.minimal_witnesses(outcome_index));
  return max_disjoint_pack(families);
}

CountDistribution x_distribution(std::span<const Event> events, unsigned threads) {
  require_same_space(events);
  if (events.empty()) return CountDistribution({Rat(1)});
  const ProductSpace& space = events.front().space();
  space.require_enumerable();
  using Pmf = std::vector<Rat>;
  Pmf init(events.size() + 1, Rat(0));
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    Pmf local(events.size() + 1, Rat(0));
    std::vector<std::vector<CoordSet>> families(events.size());
    for (std::uint64_t w = begin; w < end; ++w) {
      for (std::size_t i = 0; i < events.size(); ++i)
        families[i] = events[i].minimal_witnesses(w);
      local[static_cast<std::size_t>(max_disjoint_pack(families))] += space.outcome_weight(w);
    }
    return local;
  };
  auto merge = [](Pmf a, Pmf b) {
    for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    return a;
  };
  Pmf pmf = parallel_reduce(space.outcome_count(), threads, std::move(init), chunk, merge);
  return CountDistribution(std::move(pmf));
}

CountDistribution y_distribution(const std::vector<Rat>& probs) { return poisson_binomial(probs); }

namespace {

// Grows independent subfamilies one index at a time; the running list of
// (subset intersection, subset probability product) makes the mutual
// independence check for I ∪ {j} incremental. Dependent families have no
// independent supersets, so failed extensions are pruned outright.
struct ZSearch {
  std::span<const Event> events;
  std::vector<std::size_t> candidates;
  std::vector<boost::dynamic_bitset<>> inters;
  std::vector<Rat> prods;
  int best = 0;

  void dfs(std::size_t pos, int count) {
    best = std::max(best, count);
    if (count + static_cast<int>(candidates.size() - pos) <= best) return;
    for (std::size_t p = pos; p < candidates.size(); ++p) {
      const Event& e = events[candidates[p]];
      const std::size_t base = inters.size();
      bool ok = true;
      for (std::size_t s = 0; s < base && ok; ++s) {
        boost::dynamic_bitset<> inter = inters[s] & e.bits();
        Rat prod = prods[s] * e.probability();
        if (e.space().measure(inter) != prod) {
          ok = false;
          break;
        }
        inters.push_back(std::move(inter));
        prods.push_back(std::move(prod));
      }
      if (ok) {
        dfs(p + 1, count + 1);
      }
      inters.resize(base);
      prods.resize(base);
    }
  }
};

int z_of_containing(std::span<const Event> events, const std::vector<std::size_t>& containing) {
  ZSearch search;
  search.events = events;
  search.candidates = containing;
  if (!events.empty()) {
    boost::dynamic_bitset<> all(events.front().space().outcome_count());
    all.set();
    search.inters.push_back(std::move(all));
    search.prods.push_back(Rat(1));
  }
  search.dfs(0, 0);
  return search.best;
}

}  // namespace

int z_at(std::span<const Event> events, std::uint64_t outcome_index) {
  require_same_space(events);
  if (events.size() > kIndependenceEventCap)
    throw CapExceeded("Z search refused for more than " +
                      std::to_string(kIndependenceEventCap) + " events");
  std::vector<std::size_t> containing;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i].contains(outcome_index)) containing.push_back(i);
  return z_of_containing(events, containing);
}

CountDistribution z_distribution(std::span<const Event> events, unsigned threads) {
  require_same_space(events);
  if (events.empty()) return CountDistribution({Rat(1)});
  if (events.size() > kIndependenceEventCap)
    throw CapExceeded("Z search refused for more than " +
                      std::to_string(kIndependenceEventCap) + " events");
  const ProductSpace& space = events.front().space();
  space.require_enumerable();
  // Z depends on ω only through which events contain it; memoize per mask.
  struct Acc {
    std::vector<Rat> pmf;
    std::map<std::uint32_t, int> memo;
  };
  Acc init;
  init.pmf.assign(events.size() + 1, Rat(0));
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    Acc local;
    local.pmf.assign(events.size() + 1, Rat(0));
    for (std::uint64_t w = begin; w < end; ++w) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].contains(w)) mask |= std::uint32_t{1} << i;
      auto it = local.memo.find(mask);
      int z;
      if (it != local.memo.end()) {
        z = it->second;
      } else {
        std::vector<std::size_t> containing;
        for (std::size_t i = 0; i < events.size(); ++i)
          if (mask & (std::uint32_t{1} << i)) containing.push_back(i);
        z = z_of_containing(events, containing);
        local.memo.emplace(mask, z);
      }
      local.pmf[static_cast<std::size_t>(z)] += space.outcome_weight(w);
    }
    return local;
  };
  auto merge = [](Acc a, Acc b) {
    for (std::size_t j = 0; j < a.pmf.size(); ++j) a.pmf[j] += b.pmf[j];
    return a;
  };
  Acc acc = parallel_reduce(space.outcome_count(), threads, std::move(init), chunk, merge);
  return CountDistribution(std::move(acc.pmf));
}

}  // namespace boxkit
