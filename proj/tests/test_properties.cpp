#include <doctest.h>

#include <algorithm>
#include <random>

#include "boxkit/disjoint.hpp"
#include "boxkit/verify.hpp"

using namespace boxkit;

namespace {

// Small random linear-factor instances for the property sweeps.
struct SmallGen {
  std::mt19937_64 rng;
  explicit SmallGen(std::uint64_t seed) : rng(seed) {}

  ProductSpace space(unsigned max_coords = 3, unsigned max_size = 3) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % max_coords);
    std::vector<Factor> factors;
    for (unsigned i = 0; i < n; ++i) {
      const unsigned m = 2 + static_cast<unsigned>(rng() % (max_size - 1));
      std::vector<Rat> weights(m);
      Rat total = 0;
      for (auto& w : weights) {
        w = Rat(1 + static_cast<int>(rng() % 5));
        total += w;
      }
      for (auto& w : weights) w /= total;
      factors.push_back(Factor::chain(std::move(weights)));
    }
    return ProductSpace(std::move(factors));
  }

  Event event(const ProductSpace& sp) {
    boost::dynamic_bitset<> bits(sp.outcome_count());
    for (std::uint64_t w = 0; w < sp.outcome_count(); ++w)
      if (rng() % 2) bits.set(w);
    return Event::from_bits(sp, std::move(bits));
  }
};

}  // namespace

TEST_CASE("pointwise sandwich: X and Z never exceed the membership count") {
  SmallGen gen(101);
  for (int trial = 0; trial < 60; ++trial) {
    const ProductSpace sp = gen.space();
    std::vector<Event> events;
    const unsigned k = 1 + static_cast<unsigned>(gen.rng() % 4);
    for (unsigned i = 0; i < k; ++i) events.push_back(gen.event(sp));
    for (std::uint64_t w = 0; w < sp.outcome_count(); ++w) {
      int holding = 0;
      for (const Event& e : events) holding += e.contains(w) ? 1 : 0;
      CHECK(x_at(events, w) <= holding);
      CHECK(z_at(events, w) <= holding);
    }
  }
}

TEST_CASE("certificates returned by the search always re-verify") {
  SmallGen gen(202);
  for (int trial = 0; trial < 60; ++trial) {
    const ProductSpace sp = gen.space();
    std::vector<Event> events;
    for (unsigned i = 0; i < 3; ++i) events.push_back(gen.event(sp));
    for (std::uint64_t w = 0; w < sp.outcome_count(); ++w) {
      for (std::uint32_t mask = 0; mask < 8; ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < 3; ++i)
          if (mask & (1u << i)) subset.push_back(i);
        const auto cert = box_occurs_at(w, events, subset);
        if (cert) {
          CHECK(cert->verify(events));
          CHECK(cert->indices == subset);
        }
      }
    }
  }
}

TEST_CASE("X is insensitive to the labelling of the events") {
  SmallGen gen(303);
  for (int trial = 0; trial < 40; ++trial) {
    const ProductSpace sp = gen.space();
    std::vector<Event> events;
    for (unsigned i = 0; i < 3; ++i) events.push_back(gen.event(sp));
    std::vector<Event> shuffled = {events[2], events[0], events[1]};
    CHECK(x_distribution(events) == x_distribution(shuffled));
    for (std::uint64_t w = 0; w < sp.outcome_count(); ++w)
      CHECK(x_at(events, w) == x_at(shuffled, w));
  }
}

namespace {

// Definition-level Z oracle: every subfamily, independence by direct
// product checks over explicitly computed measures.
int z_bruteforce(const ProductSpace& sp, const std::vector<Event>& events, std::uint64_t w) {
  const std::size_t k = events.size();
  auto measure_of_mask = [&](std::uint32_t mask) {
    Rat total = 0;
    for (std::uint64_t v = 0; v < sp.outcome_count(); ++v) {
      bool in_all = true;
      for (std::size_t i = 0; i < k && in_all; ++i)
        if (mask & (1u << i)) in_all = events[i].contains(v);
      if (in_all) total += sp.outcome_weight(v);
    }
    return total;
  };
  int best = 0;
  for (std::uint32_t family = 0; family < (1u << k); ++family) {
    bool contains_all = true;
    for (std::size_t i = 0; i < k && contains_all; ++i)
      if (family & (1u << i)) contains_all = events[i].contains(w);
    if (!contains_all) continue;
    bool independent = true;
    for (std::uint32_t sub = family; sub && independent; sub = (sub - 1) & family) {
      Rat prod = 1;
      for (std::size_t i = 0; i < k; ++i)
        if (sub & (1u << i)) prod *= measure_of_mask(1u << i);
      independent = measure_of_mask(sub) == prod;
    }
    if (independent) best = std::max(best, std::popcount(family));
  }
  return best;
}

}  // namespace

TEST_CASE("z_at agrees with the all-subfamilies independence oracle") {
  SmallGen gen(707);
  for (int trial = 0; trial < 25; ++trial) {
    const ProductSpace sp = gen.space();
    std::vector<Event> events;
    const unsigned k = 1 + static_cast<unsigned>(gen.rng() % 4);
    for (unsigned i = 0; i < k; ++i) events.push_back(gen.event(sp));
    for (std::uint64_t w = 0; w < sp.outcome_count(); ++w)
      CHECK(z_at(events, w) == z_bruteforce(sp, events, w));
  }
  // Also on a family where independence genuinely holds in bulk.
  const ProductSpace cube(std::vector<Factor>(4, Factor::bernoulli(Rat(1, 2))));
  std::vector<Event> family;
  for (unsigned i = 0; i < 3; ++i) {
    boost::dynamic_bitset<> bits(cube.outcome_count());
    for (std::uint64_t w = 0; w < cube.outcome_count(); ++w)
      if (cube.coord_of(w, i) != cube.coord_of(w, 3)) bits.set(w);
    family.push_back(Event::from_bits(cube, std::move(bits)));
  }
  for (std::uint64_t w = 0; w < cube.outcome_count(); ++w)
    CHECK(z_at(family, w) == z_bruteforce(cube, family, w));
}

TEST_CASE("x_at agrees with the all-subsets witness-system oracle") {
  SmallGen gen(404);
  for (int trial = 0; trial < 30; ++trial) {
    const ProductSpace sp = gen.space(3, 3);
    std::vector<Event> events;
    const unsigned k = 1 + static_cast<unsigned>(gen.rng() % 3);
    for (unsigned i = 0; i < k; ++i) events.push_back(gen.event(sp));
    for (std::uint64_t w = 0; w < sp.outcome_count(); ++w)
      CHECK(x_at(events, w) == verify::x_at_bruteforce(events, w));
  }
}

TEST_CASE("psi = 0 makes the laws of X and Y agree exactly") {
  // Families living on disjoint coordinate blocks: coordinate i only
  // affects event i.
  const ProductSpace sp(std::vector<Factor>(3, Factor::bernoulli(Rat(1, 3))));
  std::vector<Event> events;
  for (unsigned i = 0; i < 3; ++i) events.push_back(Event::cylinder(sp, i, {1}));
  REQUIRE(psi(events) == 0);
  std::vector<Rat> probs;
  for (const Event& e : events) probs.push_back(e.probability());
  CHECK(x_distribution(events) == y_distribution(probs));

  // A block family with a bigger block: first two coordinates drive one
  // event, the third drives the other.
  const Event block = Event::up_set(sp, {{1, 1, 0}});
  const Event last = Event::cylinder(sp, 2, {1});
  const std::vector<Event> mixed = {block, last};
  REQUIRE(psi(mixed) == 0);
  CHECK(x_distribution(mixed) ==
        y_distribution({block.probability(), last.probability()}));
}

TEST_CASE("linearly ordered factors are positively associated") {
  SmallGen gen(505);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned m = 2 + static_cast<unsigned>(gen.rng() % 4);
    std::vector<Rat> weights(m);
    Rat total = 0;
    for (auto& w : weights) {
      w = Rat(static_cast<int>(gen.rng() % 5));  // zero weights allowed
      total += w;
    }
    if (total == 0) {
      weights[0] = 1;
      total = 1;
    }
    for (auto& w : weights) w /= total;
    const Factor f = Factor::chain(std::move(weights));
    CHECK(f.is_positively_associated());
  }
}

TEST_CASE("positive association agrees with a direct double-loop oracle") {
  struct Candidate {
    Factor factor;
    const char* note;
  };
  const std::vector<Candidate> candidates = {
      {Factor::antichain({Rat(1, 2), Rat(1, 2)}), "uniform antichain"},
      {Factor::antichain({Rat(9, 10), Rat(1, 10)}), "skewed antichain"},
      {Factor::diamond(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)), "uniform diamond"},
      {Factor::diamond(Rat(1, 20), Rat(9, 20), Rat(9, 20), Rat(1, 20)), "middle-heavy diamond"},
      {Factor::chain({Rat(1, 6), Rat(1, 3), Rat(1, 2)}), "3-chain"},
      {Factor({"a", "b", "c"}, {{"a", "b"}}, {Rat(1, 3), Rat(1, 3), Rat(1, 3)}), "vee"},
  };
  for (const auto& c : candidates) {
    const Factor& f = c.factor;
    const std::size_t m = f.size();
    // Oracle: enumerate every up-set directly, then the full double loop.
    std::vector<std::uint32_t> upsets;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
      bool up = true;
      for (std::size_t a = 0; a < m && up; ++a)
        for (std::size_t b = 0; b < m && up; ++b)
          if ((s & (1u << a)) && f.leq(a, b) && !(s & (1u << b))) up = false;
      if (up) upsets.push_back(s);
    }
    auto mass = [&](std::uint32_t s) {
      Rat total = 0;
      for (std::size_t e = 0; e < m; ++e)
        if (s & (1u << e)) total += f.weight(e);
      return total;
    };
    bool pa = true;
    for (std::uint32_t a : upsets)
      for (std::uint32_t b : upsets)
        if (mass(a & b) < mass(a) * mass(b)) pa = false;
    CHECK(f.is_positively_associated() == pa);
  }
}

TEST_CASE("middle-heavy diamond fails positive association") {
  // A = {m1, top}, B = {m2, top}: mass(A)mass(B) = 1/4 but mass(top) = 1/20.
  CHECK_FALSE(
      Factor::diamond(Rat(1, 20), Rat(9, 20), Rat(9, 20), Rat(1, 20)).is_positively_associated());
}

TEST_CASE("verification suites pass at reduced budgets") {
  verify::Theorem1Options t1;
  t1.max_coords = 2;
  t1.max_family = 2;
  const auto r1 = verify::theorem1_exhaustive(t1);
  CHECK(r1.passed());
  CHECK(r1.instances == 2 * (2 * (3 + 9) + 4 * (6 + 36)));

  const auto chains = verify::theorem1_random_chains(400, 17);
  CHECK(chains.passed());
  CHECK(chains.instances == 400);

  CHECK(verify::bk_recovery(2).passed());
  CHECK(verify::reimer_induction(200, 9).passed());
  CHECK(verify::harris_disjointness(2).passed());
  CHECK(verify::chernoff_tail_random(300, 11).passed());
  CHECK(verify::jub_tail_random(300, 11).passed());
  CHECK(verify::x_oracle_random(100, 13).passed());
  CHECK(verify::bounds_grid().passed());
}

TEST_CASE("the non-PA mutant is detected and serialized") {
  verify::Theorem1Options mutant;
  mutant.max_coords = 1;
  mutant.max_family = 2;
  mutant.include_non_pa_factor = true;
  const auto result = verify::theorem1_exhaustive(mutant);
  CHECK_FALSE(result.passed());
  CHECK(result.first_counterexample.find("antichain") == std::string::npos);  // serialized as JSON
  CHECK(result.first_counterexample.find("\"a\"") != std::string::npos);
  CHECK(result.first_counterexample.find("X pmf") != std::string::npos);
}

TEST_CASE("box over a family is monotone under shrinking the index set") {
  SmallGen gen(606);
  for (int trial = 0; trial < 20; ++trial) {
    const ProductSpace sp = gen.space(2, 3);
    std::vector<Event> events;
    for (unsigned i = 0; i < 3; ++i) events.push_back(gen.event(sp));
    const Event box_all = box_event(events, std::vector<std::size_t>{0, 1, 2});
    const Event box_pair = box_event(events, std::vector<std::size_t>{0, 1});
    // Dropping an index can only help: box over I' is a superset for I' in I.
    CHECK((box_all.bits() & box_pair.bits()) == box_all.bits());
  }
}
