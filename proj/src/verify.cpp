#include "boxkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "boxkit/bounds.hpp"
#include "boxkit/formats.hpp"
#include "boxkit/percolation.hpp"

namespace boxkit::verify {

namespace {

// Mixed-radix odometer over tuples in {0..base-1}^len; false once wrapped.
bool next_tuple(std::vector<std::size_t>& tuple, std::size_t base) {
  for (std::size_t j = tuple.size(); j-- > 0;) {
    if (++tuple[j] < base) return true;
    tuple[j] = 0;
  }
  return false;
}

std::string serialize_counterexample(const ProductSpace& space, std::span<const Event> events,
                                     const std::string& facts) {
  std::ostringstream out;
  out << "space: " << space_to_json(space) << '\n'
      << "events: " << events_to_json(events) << '\n'
      << facts;
  return out.str();
}

// Per-event tables reused across every family drawn from the same pool.
struct EventPool {
  const ProductSpace* space = nullptr;
  std::vector<Event> events;
  std::vector<std::vector<std::vector<CoordSet>>> witness_tables;  // [event][outcome]
  std::vector<Rat> probabilities;
  std::vector<CoordSet> affected;  // coordinates each event depends on

  void build(const ProductSpace& sp, std::vector<Event> evs) {
    space = &sp;
    events = std::move(evs);
    witness_tables.assign(events.size(), {});
    probabilities.clear();
    affected.assign(events.size(), 0);
    for (std::size_t e = 0; e < events.size(); ++e) {
      witness_tables[e].resize(sp.outcome_count());
      for (std::uint64_t w = 0; w < sp.outcome_count(); ++w)
        witness_tables[e][w] = events[e].minimal_witnesses(w);
      probabilities.push_back(events[e].probability());
      for (std::size_t i = 0; i < sp.arity(); ++i)
        if (events[e].affects(i)) affected[e] |= CoordSet{1} << i;
    }
  }

  CountDistribution x_law(std::span<const std::size_t> family) const {
    std::vector<Rat> pmf(family.size() + 1, Rat(0));
    std::vector<std::vector<CoordSet>> families(family.size());
    for (std::uint64_t w = 0; w < space->outcome_count(); ++w) {
      for (std::size_t j = 0; j < family.size(); ++j)
        families[j] = witness_tables[family[j]][w];
      pmf[static_cast<std::size_t>(max_disjoint_pack(families))] += space->outcome_weight(w);
    }
    return CountDistribution(std::move(pmf));
  }

  CountDistribution y_law(std::span<const std::size_t> family) const {
    std::vector<Rat> probs;
    probs.reserve(family.size());
    for (std::size_t j : family) probs.push_back(probabilities[j]);
    return poisson_binomial(probs);
  }

  int psi_of(std::span<const std::size_t> family) const {
    int result = 0;
    for (std::size_t i = 0; i < space->arity(); ++i) {
      const CoordSet bit = CoordSet{1} << i;
      int touched = 0;
      for (std::size_t j : family)
        if ((affected[j] & bit) && ++touched >= 2) break;
      if (touched >= 2) ++result;
    }
    return result;
  }

  std::vector<Event> pick(std::span<const std::size_t> family) const {
    std::vector<Event> out;
    out.reserve(family.size());
    for (std::size_t j : family) out.push_back(events[j]);
    return out;
  }
};

// Runs `check` on every ordered tuple (with repetition) of pool indices of
// length 1..max_family.
template <class Check>
void for_each_family(std::size_t pool_size, unsigned max_family, Check&& check) {
  if (pool_size == 0) return;
  std::vector<std::size_t> family;
  for (unsigned k = 1; k <= max_family; ++k) {
    family.assign(k, 0);
    do {
      check(std::span<const std::size_t>(family));
    } while (next_tuple(family, pool_size));
  }
}

void domination_sweep(const ProductSpace& space, const std::vector<Event>& pool_events,
                      unsigned max_family, bool check_psi_zero, SuiteResult& result) {
  if (pool_events.empty()) return;
  EventPool pool;
  pool.build(space, pool_events);
  for_each_family(pool.events.size(), max_family, [&](std::span<const std::size_t> family) {
    ++result.instances;
    const CountDistribution x = pool.x_law(family);
    const CountDistribution y = pool.y_law(family);
    const bool dominated = stochastically_dominates(x, y);
    bool psi_zero_ok = true;
    if (check_psi_zero && pool.psi_of(family) == 0) psi_zero_ok = (x == y);
    if (dominated && psi_zero_ok) return;
    ++result.violations;
    if (result.first_counterexample.empty()) {
      std::ostringstream facts;
      facts << (dominated ? "psi = 0 but the laws of X and Y differ" : "X is not dominated by Y")
            << "\nX pmf:";
      for (std::size_t j = 0; j <= x.max_count(); ++j) facts << ' ' << to_string(x.pmf(j));
      facts << "\nY pmf:";
      for (std::size_t j = 0; j <= y.max_count(); ++j) facts << ' ' << to_string(y.pmf(j));
      const std::vector<Event> events = pool.pick(family);
      result.first_counterexample = serialize_counterexample(space, events, facts.str());
    }
  });
}

std::vector<Event> events_from_bitsets(const ProductSpace& space,
                                       const std::vector<boost::dynamic_bitset<>>& bitsets) {
  std::vector<Event> events;
  events.reserve(bitsets.size());
  for (const auto& bits : bitsets) events.push_back(Event::from_bits(space, bits));
  return events;
}

std::vector<Event> complements(const std::vector<Event>& events) {
  std::vector<Event> out;
  out.reserve(events.size());
  for (const Event& e : events) out.push_back(~e);
  return out;
}

}  // namespace

SuiteResult theorem1_exhaustive(const Theorem1Options& options) {
  SuiteResult result;
  result.name = "theorem1-exhaustive";
  // Factor menu: uniform and (1/3, 2/3) Bernoulli chains; optionally the
  // uniform two-element antichain, which fails positive association.
  std::vector<Factor> menu;
  menu.push_back(Factor::bernoulli(Rat(1, 2)));
  menu.push_back(Factor::bernoulli(Rat(2, 3)));
  if (options.include_non_pa_factor) menu.push_back(Factor::antichain({Rat(1, 2), Rat(1, 2)}));

  for (unsigned n = 1; n <= options.max_coords; ++n) {
    std::vector<std::size_t> choice(n, 0);
    do {
      std::vector<Factor> factors;
      factors.reserve(n);
      for (std::size_t i = 0; i < n; ++i) factors.push_back(menu[choice[i]]);
      const ProductSpace space(std::move(factors));
      const auto upsets = enumerate_upset_bitsets(space);
      const std::vector<Event> increasing = events_from_bitsets(space, upsets);
      domination_sweep(space, increasing, options.max_family, options.check_psi_zero, result);
      domination_sweep(space, complements(increasing), options.max_family, options.check_psi_zero,
                       result);
    } while (next_tuple(choice, menu.size()));
  }
  return result;
}

SuiteResult theorem1_pa_diamond(unsigned max_coords, unsigned max_family) {
  SuiteResult result;
  result.name = "theorem1-pa-diamond";
  const std::vector<Factor> weightings = {
      Factor::diamond(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)),
      Factor::diamond(Rat(1, 2), Rat(1, 6), Rat(1, 6), Rat(1, 6)),
      Factor::diamond(Rat(1, 6), Rat(1, 6), Rat(1, 6), Rat(1, 2)),
  };
  for (const Factor& f : weightings)
    if (!f.is_positively_associated())
      throw std::logic_error("diamond weighting unexpectedly fails positive association");
  for (const Factor& f : weightings) {
    for (unsigned n = 1; n <= max_coords; ++n) {
      const ProductSpace space(std::vector<Factor>(n, f));
      const auto upsets = enumerate_upset_bitsets(space, 16);
      const std::vector<Event> increasing = events_from_bitsets(space, upsets);
      domination_sweep(space, increasing, max_family, true, result);
      domination_sweep(space, complements(increasing), max_family, true, result);
    }
  }
  return result;
}

SuiteResult theorem1_random_chains(std::uint64_t instances, std::uint64_t seed,
                                   unsigned max_coords, unsigned max_factor_size,
                                   unsigned max_family) {
  SuiteResult result;
  result.name = "theorem1-random-chains";
  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < instances; ++trial) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % max_coords);
    std::vector<Factor> factors;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned m =
          2 + static_cast<unsigned>(max_factor_size <= 2 ? 0 : rng() % (max_factor_size - 1));
      std::vector<Rat> weights(m);
      Rat total = 0;
      for (auto& w : weights) {
        w = Rat(1 + static_cast<int>(rng() % 6));
        total += w;
      }
      for (auto& w : weights) w /= total;
      factors.push_back(Factor::chain(std::move(weights)));
    }
    const ProductSpace space(std::move(factors));
    // Random up-sets as up-closures of random generator outcomes.
    const unsigned k = 1 + static_cast<unsigned>(rng() % max_family);
    std::vector<Event> increasing;
    for (unsigned e = 0; e < k; ++e) {
      std::vector<Outcome> generators;
      const unsigned count = static_cast<unsigned>(rng() % 3);
      for (unsigned g = 0; g < count; ++g)
        generators.push_back(
            space.outcome_of(rng() % space.outcome_count()));
      increasing.push_back(Event::up_set(space, generators));
    }
    result.instances += 1;
    EventPool pool;
    pool.build(space, increasing);
    std::vector<std::size_t> family(increasing.size());
    for (std::size_t j = 0; j < family.size(); ++j) family[j] = j;
    const CountDistribution x = pool.x_law(family);
    const CountDistribution y = pool.y_law(family);
    const bool dominated = stochastically_dominates(x, y);
    const bool psi_zero_ok = pool.psi_of(family) != 0 || x == y;
    const std::vector<Event> decreasing = complements(increasing);
    EventPool dual;
    dual.build(space, decreasing);
    const bool dual_ok = stochastically_dominates(dual.x_law(family), dual.y_law(family));
    if (dominated && psi_zero_ok && dual_ok) continue;
    ++result.violations;
    if (result.first_counterexample.empty())
      result.first_counterexample = serialize_counterexample(
          space, increasing, dominated ? "psi/dual check failed" : "X not dominated by Y");
  }
  return result;
}

namespace {

void box_product_sweep(const ProductSpace& space, const std::vector<Event>& pool,
                       unsigned family_size, SuiteResult& result) {
  EventPool tables;
  tables.build(space, pool);
  std::vector<std::size_t> family(family_size, 0);
  do {
    ++result.instances;
    // mu(box of the whole family) via the cached witness tables.
    Rat box_measure = 0;
    std::vector<std::vector<CoordSet>> families(family_size);
    for (std::uint64_t w = 0; w < space.outcome_count(); ++w) {
      bool feasible = true;
      for (std::size_t j = 0; j < family_size && feasible; ++j) {
        families[j] = tables.witness_tables[family[j]][w];
        feasible = !families[j].empty();
      }
      if (feasible && can_pack_all(families)) box_measure += space.outcome_weight(w);
    }
    Rat product = 1;
    for (std::size_t j : family) product *= tables.probabilities[j];
    if (box_measure > product) {
      ++result.violations;
      if (result.first_counterexample.empty()) {
        std::ostringstream facts;
        facts << "mu(box) = " << to_string(box_measure) << " > product " << to_string(product);
        result.first_counterexample =
            serialize_counterexample(space, tables.pick(family), facts.str());
      }
    }
  } while (next_tuple(family, pool.size()));
}

}  // namespace

SuiteResult bk_recovery(unsigned max_coords) {
  SuiteResult result;
  result.name = "bk-recovery";
  for (unsigned n = 1; n <= max_coords; ++n) {
    const ProductSpace space(std::vector<Factor>(n, Factor::bernoulli(Rat(1, 2))));
    const auto upsets = enumerate_upset_bitsets(space);
    box_product_sweep(space, events_from_bitsets(space, upsets), 2, result);
  }
  return result;
}

SuiteResult reimer_induction(std::uint64_t random_triples, std::uint64_t seed) {
  SuiteResult result;
  result.name = "reimer-induction";
  {
    // All 16 x 16 arbitrary event pairs on uniform {0,1}^2.
    const ProductSpace space(std::vector<Factor>(2, Factor::bernoulli(Rat(1, 2))));
    std::vector<Event> pool;
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
      boost::dynamic_bitset<> bits(4, mask);
      pool.push_back(Event::from_bits(space, std::move(bits)));
    }
    box_product_sweep(space, pool, 2, result);
  }
  if (random_triples > 0) {
    const ProductSpace space(std::vector<Factor>(3, Factor::bernoulli(Rat(1, 2))));
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < random_triples; ++i) {
      std::vector<Event> triple;
      for (int j = 0; j < 3; ++j) {
        boost::dynamic_bitset<> bits(8, rng() & 0xffu);
        triple.push_back(Event::from_bits(space, std::move(bits)));
      }
      ++result.instances;
      const Rat box_measure = box_event(triple).probability();
      Rat product = 1;
      for (const Event& e : triple) product *= e.probability();
      if (box_measure > product) {
        ++result.violations;
        if (result.first_counterexample.empty())
          result.first_counterexample = serialize_counterexample(
              space, triple,
              "mu(box) = " + to_string(box_measure) + " > product " + to_string(product));
      }
    }
  }
  return result;
}

namespace {

struct RandomInstanceOptions {
  unsigned max_coords = 3;
  unsigned max_factor_size = 3;
  unsigned max_events = 4;
  bool linear_only = true;
};

Instance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options) {
  const unsigned n = 1 + static_cast<unsigned>(rng() % options.max_coords);
  std::vector<Factor> factors;
  for (unsigned i = 0; i < n; ++i) {
    const unsigned m = 2 + static_cast<unsigned>(rng() % (options.max_factor_size - 1));
    std::vector<Rat> numerators(m);
    Rat total = 0;
    for (auto& w : numerators) {
      w = Rat(1 + static_cast<int>(rng() % 6));
      total += w;
    }
    for (auto& w : numerators) w /= total;
    if (!options.linear_only && rng() % 3 == 0) {
      if (m >= 2 && rng() % 2 == 0) {
        factors.push_back(Factor::antichain(std::move(numerators)));
      } else {
        factors.push_back(Factor::diamond(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)));
      }
    } else {
      factors.push_back(Factor::chain(std::move(numerators)));
    }
  }
  Instance instance;
  instance.space = std::make_unique<ProductSpace>(std::move(factors));
  const std::uint64_t count = instance.space->outcome_count();
  const unsigned k = 1 + static_cast<unsigned>(rng() % options.max_events);
  for (unsigned e = 0; e < k; ++e) {
    const std::uint64_t density = 1 + rng() % 3;  // membership odds density/4
    boost::dynamic_bitset<> bits(count);
    for (std::uint64_t w = 0; w < count; ++w)
      if (rng() % 4 < density) bits.set(w);
    instance.events.push_back(Event::from_bits(*instance.space, std::move(bits)));
  }
  return instance;
}

using LawFn = CountDistribution (*)(std::span<const Event>, unsigned);

SuiteResult tail_bound_sweep(const std::string& name, std::uint64_t instances, std::uint64_t seed,
                             LawFn law, bool linear_only) {
  SuiteResult result;
  result.name = name;
  std::mt19937_64 rng(seed);
  RandomInstanceOptions options;
  options.linear_only = linear_only;
  for (std::uint64_t i = 0; i < instances; ++i) {
    const Instance instance = random_instance(rng, options);
    ++result.instances;
    Rat lambda = 0;
    for (const Event& e : instance.events) lambda += e.probability();
    const double lambda_d = to_double(lambda);
    const CountDistribution dist = law(instance.events, 1);
    const auto k = static_cast<unsigned>(instance.events.size());
    for (unsigned t = 1; t <= k + 1; ++t) {
      const Rat tail = dist.survival_at(lambda + t);
      const double bound = bk_chernoff(lambda_d, static_cast<double>(t));
      if (to_double(tail) <= bound + 1e-12) continue;
      ++result.violations;
      if (result.first_counterexample.empty()) {
        std::ostringstream facts;
        facts << "t = " << t << ": exact tail " << to_string(tail) << " > bound "
              << format_double(bound) << " (lambda = " << to_string(lambda) << ")";
        result.first_counterexample =
            serialize_counterexample(*instance.space, instance.events, facts.str());
      }
    }
  }
  return result;
}

}  // namespace

SuiteResult chernoff_tail_random(std::uint64_t instances, std::uint64_t seed) {
  return tail_bound_sweep(
      "theorem2-chernoff-tail", instances, seed,
      [](std::span<const Event> events, unsigned threads) { return x_distribution(events, threads); },
      /*linear_only=*/true);
}

SuiteResult jub_tail_random(std::uint64_t instances, std::uint64_t seed) {
  // Same seed => the first `instances` draws replay the Chernoff corpus;
  // the extra quarter mixes in non-linear factors, which Z's bound allows.
  SuiteResult shared = tail_bound_sweep(
      "jub-tail", instances, seed,
      [](std::span<const Event> events, unsigned threads) { return z_distribution(events, threads); },
      /*linear_only=*/true);
  SuiteResult mixed = tail_bound_sweep(
      "jub-tail", instances / 4, seed ^ 0x5eedULL,
      [](std::span<const Event> events, unsigned threads) { return z_distribution(events, threads); },
      /*linear_only=*/false);
  shared.instances += mixed.instances;
  shared.violations += mixed.violations;
  if (shared.first_counterexample.empty()) shared.first_counterexample = mixed.first_counterexample;
  return shared;
}

SuiteResult harris_disjointness(unsigned max_coords) {
  SuiteResult result;
  result.name = "harris-disjointness";

  auto check_family = [&result](const ProductSpace& space, const std::vector<Event>& events) {
    ++result.instances;
    const auto k = events.size();
    std::vector<std::size_t> subset;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      subset.clear();
      std::vector<Event> chosen;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::uint32_t{1} << i)) {
          subset.push_back(i);
          chosen.push_back(events[i]);
        }
      const Rat box_measure = box_event(events, subset).probability();
      const Rat inter_measure = intersection_probability(chosen);
      if (box_measure != inter_measure) {
        ++result.violations;
        if (result.first_counterexample.empty()) {
          std::ostringstream facts;
          facts << "subfamily mask " << mask << ": mu(box) = " << to_string(box_measure)
                << " != mu(intersection) = " << to_string(inter_measure);
          result.first_counterexample = serialize_counterexample(space, events, facts.str());
        }
      }
    }
  };

  for (unsigned n = 1; n <= max_coords; ++n) {
    const ProductSpace space(std::vector<Factor>(n, Factor::bernoulli(Rat(1, 2))));
    // Single-coordinate increasing cylinders on distinct coordinates are
    // mutually independent under the product measure.
    std::vector<Event> cylinders;
    for (unsigned i = 0; i < n; ++i) cylinders.push_back(Event::cylinder(space, i, {1}));
    check_family(space, cylinders);

    // Every mutually independent pair of increasing events.
    const auto upsets = enumerate_upset_bitsets(space);
    const std::vector<Event> pool = events_from_bitsets(space, upsets);
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = 0; b < pool.size(); ++b) {
        const std::vector<Event> pair = {pool[a], pool[b]};
        if (!are_independent(pair)) continue;
        check_family(space, pair);
      }
  }
  // A weighted variant: independence survives non-uniform Bernoulli factors.
  {
    const ProductSpace space(std::vector<Factor>(3, Factor::bernoulli(Rat(2, 3))));
    std::vector<Event> cylinders;
    for (unsigned i = 0; i < 3; ++i) cylinders.push_back(Event::cylinder(space, i, {1}));
    check_family(space, cylinders);
  }
  return result;
}

int x_at_bruteforce(std::span<const Event> events, std::uint64_t outcome_index) {
  if (events.empty()) return 0;
  const ProductSpace& space = events.front().space();
  const std::size_t n = space.arity();
  const std::uint64_t count = space.outcome_count();
  // digits[w][i]: decoded coordinates, so agreement tests are plain loops.
  std::vector<std::vector<int>> digits(count, std::vector<int>(n));
  for (std::uint64_t w = 0; w < count; ++w)
    for (std::size_t i = 0; i < n; ++i) digits[w][i] = space.coord_of(w, i);

  // witness_masks[e]: every S (not only minimal ones) witnessing the
  // outcome's membership, straight from the definition.
  std::vector<std::vector<CoordSet>> witness_masks(events.size());
  const CoordSet all = (n >= 32) ? ~CoordSet{0} : ((CoordSet{1} << n) - 1);
  for (std::size_t e = 0; e < events.size(); ++e) {
    for (CoordSet s = 0;; ++s) {
      bool witness = true;
      for (std::uint64_t w = 0; w < count && witness; ++w) {
        bool agrees = true;
        for (std::size_t i = 0; i < n && agrees; ++i)
          if ((s >> i) & 1u) agrees = digits[w][i] == digits[outcome_index][i];
        if (agrees && !events[e].contains(w)) witness = false;
      }
      if (witness) witness_masks[e].push_back(s);
      if (s == all) break;
    }
  }

  // Plain exhaustive recursion over all witness systems.
  int best = 0;
  auto recurse = [&](auto&& self, std::size_t e, CoordSet used, int chosen) -> void {
    best = std::max(best, chosen);
    if (e == events.size()) return;
    self(self, e + 1, used, chosen);
    for (CoordSet s : witness_masks[e])
      if ((s & used) == 0) self(self, e + 1, used | s, chosen + 1);
  };
  recurse(recurse, 0, 0, 0);
  return best;
}

SuiteResult x_oracle_random(std::uint64_t instances, std::uint64_t seed) {
  SuiteResult result;
  result.name = "x-oracle-equivalence";
  std::mt19937_64 rng(seed);
  RandomInstanceOptions options;
  options.max_coords = 4;
  options.max_events = 3;
  options.max_factor_size = 3;
  for (std::uint64_t i = 0; i < instances; ++i) {
    Instance instance = random_instance(rng, options);
    // Keep the oracle's all-subsets sweep affordable.
    if (instance.space->outcome_count() > 32 || instance.space->arity() > 4) {
      instance = random_instance(rng, {4, 2, 3, true});
    }
    ++result.instances;
    bool bad = false;
    for (std::uint64_t w = 0; w < instance.space->outcome_count() && !bad; ++w) {
      const int fast = x_at(instance.events, w);
      const int brute = x_at_bruteforce(instance.events, w);
      if (fast != brute) {
        bad = true;
        ++result.violations;
        if (result.first_counterexample.empty()) {
          std::ostringstream facts;
          facts << "outcome " << w << ": x_at = " << fast << ", brute force = " << brute;
          result.first_counterexample =
              serialize_counterexample(*instance.space, instance.events, facts.str());
        }
      }
    }
  }
  return result;
}

SuiteResult percolation_specialization() {
  SuiteResult result;
  result.name = "percolation-specialization";
  struct Case {
    Graph graph;
    TerminalPairs pairs;
  };
  std::vector<Case> cases;
  cases.push_back({Graph::grid(2, 2), TerminalPairs{{{0, 3}, {1, 2}}}});
  cases.push_back({Graph::grid(3, 3), TerminalPairs{{{0, 8}, {2, 6}}}});
  cases.push_back({Graph::cycle(6), TerminalPairs{{{0, 1}, {2, 3}, {4, 5}}}});
  for (const Case& c : cases) {
    c.graph.validate();
    c.pairs.validate(c.graph);
    const ProductSpace space = build_edge_space(c.graph, Rat(1, 2));
    std::vector<Event> events;
    for (const auto& pair : c.pairs.pairs) events.push_back(path_event(space, c.graph, pair));
    for (std::uint64_t w = 0; w < space.outcome_count(); ++w) {
      ++result.instances;
      const EdgeConfiguration config = outcome_to_configuration(space, w);
      const int from_graph = max_disjoint_connected_pairs(c.graph, config, c.pairs);
      const int from_space = x_at(events, w);
      if (from_graph != from_space) {
        ++result.violations;
        if (result.first_counterexample.empty()) {
          std::ostringstream facts;
          facts << "configuration " << config << ": graph search = " << from_graph
                << ", x_at = " << from_space;
          result.first_counterexample = serialize_counterexample(space, events, facts.str());
        }
      }
    }
  }
  return result;
}

SuiteResult bounds_grid() {
  SuiteResult result;
  result.name = "bounds-grid";
  for (int li = 1; li <= 100; ++li) {
    const double lambda = li / 10.0;
    for (unsigned t = 1; t <= 20; ++t) {
      ++result.instances;
      const double prod = product_bound(lambda, t);
      const double chern = bk_chernoff(lambda, static_cast<double>(t));
      const double bern = bernstein(lambda, static_cast<double>(t));
      bool ok = prod <= chern && chern <= bern && bern <= 1.0;

      // Quadrature identity: integral_0^t log(lambda/(lambda+t-x)) dx equals
      // -lambda * phi(t/lambda). Composite Simpson; the integrand is smooth.
      const std::size_t steps = lambda < 1.0 ? 65536 : 16384;
      const double h = static_cast<double>(t) / static_cast<double>(steps);
      auto f = [lambda, t](double x) { return std::log(lambda / (lambda + t - x)); };
      double sum = f(0.0) + f(static_cast<double>(t));
      for (std::size_t s = 1; s < steps; ++s) sum += (s % 2 == 1 ? 4.0 : 2.0) * f(h * s);
      const double integral = sum * h / 3.0;
      const double closed_form = -lambda * phi(t / lambda);
      if (std::abs(integral - closed_form) >= 1e-9) ok = false;

      if (!ok) {
        ++result.violations;
        if (result.first_counterexample.empty()) {
          std::ostringstream facts;
          facts << "lambda = " << lambda << ", t = " << t << ": product = " << prod
                << ", chernoff = " << chern << ", bernstein = " << bern
                << ", quadrature gap = " << std::abs(integral - closed_form);
          result.first_counterexample = facts.str();
        }
      }
    }
  }
  return result;
}

std::vector<SuiteResult> run_suites(const VerifyBudgets& budgets) {
  std::vector<SuiteResult> results;
  if (budgets.max_coords == 0 || budgets.max_family == 0) return results;
  Theorem1Options t1;
  t1.max_coords = budgets.max_coords;
  t1.max_family = budgets.max_family;
  t1.include_non_pa_factor = budgets.include_non_pa_factor;
  results.push_back(theorem1_exhaustive(t1));
  results.push_back(theorem1_pa_diamond(std::min(budgets.max_coords, 2u),
                                        std::min(budgets.max_family, 2u)));
  results.push_back(theorem1_random_chains(std::min<std::uint64_t>(budgets.random_instances, 2000),
                                           budgets.seed, budgets.max_coords,
                                           std::max(budgets.max_factor_size, 2u),
                                           budgets.max_family));
  results.push_back(bk_recovery(budgets.max_coords));
  results.push_back(reimer_induction(std::min<std::uint64_t>(budgets.random_instances, 2000),
                                     budgets.seed));
  results.push_back(chernoff_tail_random(budgets.random_instances, budgets.seed));
  results.push_back(jub_tail_random(budgets.random_instances, budgets.seed));
  results.push_back(harris_disjointness(budgets.max_coords));
  results.push_back(x_oracle_random(std::min<std::uint64_t>(budgets.random_instances, 1000),
                                    budgets.seed));
  results.push_back(percolation_specialization());
  results.push_back(bounds_grid());
  return results;
}

}  // namespace boxkit::verify
