#include <doctest.h>

#include "boxkit/disjoint.hpp"

using namespace boxkit;

namespace {

ProductSpace uniform_cube(unsigned n) {
  return ProductSpace(std::vector<Factor>(n, Factor::bernoulli(Rat(1, 2))));
}

// The canonical two-event instance: A = {w_1 = 1}, B = {w_2 = 1}.
std::vector<Event> bk_pair(const ProductSpace& square) {
  return {Event::cylinder(square, 0, {1}), Event::cylinder(square, 1, {1})};
}

std::vector<Event> unequal_family(const ProductSpace& space, unsigned n) {
  std::vector<Event> events;
  for (unsigned i = 0; i + 1 < n; ++i) {
    boost::dynamic_bitset<> bits(space.outcome_count());
    for (std::uint64_t w = 0; w < space.outcome_count(); ++w)
      if (space.coord_of(w, i) != space.coord_of(w, n - 1)) bits.set(w);
    events.push_back(Event::from_bits(space, std::move(bits)));
  }
  return events;
}

}  // namespace

TEST_CASE("box over the empty index set always occurs") {
  const ProductSpace square = uniform_cube(2);
  const auto events = bk_pair(square);
  const auto cert = box_occurs_at(0, events, std::vector<std::size_t>{});
  REQUIRE(cert.has_value());
  CHECK(cert->indices.empty());
  CHECK(cert->verify(events));
}

TEST_CASE("certificates for the canonical pair") {
  const ProductSpace square = uniform_cube(2);
  const auto events = bk_pair(square);
  const std::vector<std::size_t> both = {0, 1};

  const auto at_11 = box_occurs_at(square.index_of({1, 1}), events, both);
  REQUIRE(at_11.has_value());
  CHECK(at_11->witnesses == std::vector<CoordSet>{0b01, 0b10});
  CHECK(at_11->verify(events));

  CHECK_FALSE(box_occurs_at(square.index_of({1, 0}), events, both).has_value());
}

TEST_CASE("box event of the canonical pair is the equality case") {
  const ProductSpace square = uniform_cube(2);
  const auto events = bk_pair(square);
  const Event box = box_event(events);
  CHECK(box.member_count() == 1);
  CHECK(box.contains(square.index_of({1, 1})));
  CHECK(box.probability() == Rat(1, 4));
  CHECK(box.probability() == events[0].probability() * events[1].probability());
}

TEST_CASE("a repeated cylinder cannot occur disjointly with itself") {
  const ProductSpace square = uniform_cube(2);
  const Event a = Event::cylinder(square, 0, {1});
  const Event box = box_event(std::vector<Event>{a, a});
  CHECK(box.member_count() == 0);
}

TEST_CASE("box of a single full-space event is the full space") {
  const ProductSpace square = uniform_cube(2);
  const Event box = box_event(std::vector<Event>{Event::full(square)});
  CHECK(box.member_count() == square.outcome_count());
}

TEST_CASE("x_at on the worked instances") {
  const ProductSpace square = uniform_cube(2);
  const auto events = bk_pair(square);
  CHECK(x_at(events, square.index_of({0, 0})) == 0);
  CHECK(x_at(events, square.index_of({0, 1})) == 1);
  CHECK(x_at(events, square.index_of({1, 1})) == 2);

  const ProductSpace line({Factor::bernoulli(Rat(1, 2))});
  const std::vector<Event> remark_ii = {Event::explicit_outcomes(line, {{0}}),
                                        Event::explicit_outcomes(line, {{1}})};
  CHECK(x_at(remark_ii, 0) == 1);
  CHECK(x_at(remark_ii, 1) == 1);

  const ProductSpace cube4 = uniform_cube(4);
  const auto family = unequal_family(cube4, 4);
  for (std::uint64_t w = 0; w < cube4.outcome_count(); ++w) CHECK(x_at(family, w) <= 1);
}

TEST_CASE("x distribution examples") {
  const ProductSpace square = uniform_cube(2);
  const Event a = Event::cylinder(square, 0, {1});

  const CountDistribution single = x_distribution(std::vector<Event>{a});
  CHECK(single.pmf(1) == a.probability());
  CHECK(single.pmf(0) == Rat(1) - a.probability());

  const ProductSpace line({Factor::bernoulli(Rat(1, 2))});
  const std::vector<Event> remark_ii = {Event::explicit_outcomes(line, {{0}}),
                                        Event::explicit_outcomes(line, {{1}})};
  const CountDistribution remark = x_distribution(remark_ii);
  CHECK(remark.pmf(0) == 0);
  CHECK(remark.pmf(1) == 1);
  CHECK(remark.pmf(2) == 0);

  const CountDistribution pair = x_distribution(bk_pair(square));
  CHECK(pair.pmf(0) == Rat(1, 4));
  CHECK(pair.pmf(1) == Rat(1, 2));
  CHECK(pair.pmf(2) == Rat(1, 4));

  CHECK(x_distribution(std::vector<Event>{}).pmf(0) == 1);
}

TEST_CASE("x distribution is independent of the thread count") {
  const ProductSpace cube = uniform_cube(3);
  std::vector<Event> events = {Event::up_set(cube, {{1, 0, 0}}), Event::up_set(cube, {{0, 1, 1}}),
                               Event::cylinder(cube, 2, {1})};
  CHECK(x_distribution(events, 1) == x_distribution(events, 4));
  CHECK(z_distribution(events, 1) == z_distribution(events, 4));
}

TEST_CASE("poisson binomial exact laws") {
  const CountDistribution certain = y_distribution({Rat(1), Rat(1), Rat(1)});
  CHECK(certain.pmf(3) == 1);
  CHECK(certain.survival(3) == 1);

  const CountDistribution fair = y_distribution({Rat(1, 2), Rat(1, 2)});
  CHECK(fair.pmf(0) == Rat(1, 4));
  CHECK(fair.pmf(1) == Rat(1, 2));
  CHECK(fair.pmf(2) == Rat(1, 4));

  // Brute force over the four Bernoulli patterns.
  const std::vector<Rat> probs = {Rat(3, 10), Rat(3, 5)};
  std::vector<Rat> expected(3, Rat(0));
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2) {
      const Rat w = (b1 ? probs[0] : Rat(1) - probs[0]) * (b2 ? probs[1] : Rat(1) - probs[1]);
      expected[static_cast<std::size_t>(b1 + b2)] += w;
    }
  CHECK(expected[0] == Rat(7, 25));
  CHECK(expected[1] == Rat(27, 50));
  CHECK(expected[2] == Rat(9, 50));
  const CountDistribution law = y_distribution(probs);
  for (std::size_t j = 0; j <= 2; ++j) CHECK(law.pmf(j) == expected[j]);

  CHECK_THROWS_AS(y_distribution({Rat(3, 2)}), std::domain_error);
}

TEST_CASE("z_at on the worked instances") {
  const ProductSpace cube4 = uniform_cube(4);
  const auto family = unequal_family(cube4, 4);
  CHECK(z_at(family, cube4.index_of({0, 0, 0, 1})) == 3);
  CHECK(z_at(family, cube4.index_of({1, 1, 1, 1})) == 0);

  // Nested events: the pair fails the product rule, so Z sticks at 1.
  const ProductSpace square = uniform_cube(2);
  const Event small = Event::explicit_outcomes(square, {{1, 1}});
  const Event big = Event::up_set(square, {{1, 0}});
  CHECK(z_at(std::vector<Event>{small, big}, square.index_of({1, 1})) == 1);
  CHECK(z_at(std::vector<Event>{small, big}, square.index_of({0, 0})) == 0);
}

TEST_CASE("z distribution: single event and the n = 3 family") {
  const ProductSpace square = uniform_cube(2);
  const Event a = Event::cylinder(square, 0, {1});
  const CountDistribution single = z_distribution(std::vector<Event>{a});
  CHECK(single.pmf(1) == Rat(1, 2));

  // Frozen from the 8-outcome brute force: Z counts how many of the two
  // events hold, since the family is independent.
  const ProductSpace cube3 = uniform_cube(3);
  const auto family = unequal_family(cube3, 3);
  const CountDistribution law = z_distribution(family);
  CHECK(law.pmf(0) == Rat(1, 4));
  CHECK(law.pmf(1) == Rat(1, 2));
  CHECK(law.pmf(2) == Rat(1, 4));

  // Independent increasing cylinders: Z and X have the same law.
  const auto pair = bk_pair(square);
  CHECK(z_distribution(pair) == x_distribution(pair));
}

TEST_CASE("stochastic domination checks") {
  const CountDistribution point1({Rat(0), Rat(1)});
  CHECK(stochastically_dominates(point1, point1));

  const CountDistribution y = y_distribution({Rat(1, 2), Rat(1, 2)});
  const CountDistribution x({Rat(0), Rat(1), Rat(0)});
  CHECK_FALSE(stochastically_dominates(x, y));  // 1 > 3/4 at r = 1
  CHECK_FALSE(stochastically_dominates(y, x));  // 1/4 > 0 at r = 2: incomparable

  const CountDistribution point2({Rat(0), Rat(0), Rat(1)});
  CHECK(stochastically_dominates(x, point2));
  CHECK(stochastically_dominates(y, point2));

  const CountDistribution point0({Rat(1)});
  CHECK(stochastically_dominates(point0, y));
  CHECK(stochastically_dominates(point0, point1));
}

TEST_CASE("distribution constructor validates") {
  CHECK_THROWS_AS(CountDistribution({Rat(1, 2), Rat(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(CountDistribution({Rat(3, 2), Rat(-1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(CountDistribution(std::vector<Rat>{}), std::invalid_argument);
}

TEST_CASE("survival at rational thresholds") {
  const CountDistribution y = y_distribution({Rat(1, 2), Rat(1, 2)});
  CHECK(y.survival_at(Rat(1, 2)) == Rat(3, 4));
  CHECK(y.survival_at(Rat(1)) == Rat(3, 4));
  CHECK(y.survival_at(Rat(3, 2)) == Rat(1, 4));
  CHECK(y.survival_at(Rat(5, 2)) == 0);
  CHECK(y.survival_at(Rat(0)) == 1);
  CHECK(y.survival_at(Rat(-1)) == 1);
  CHECK(y.mean() == 1);
}

TEST_CASE("certificate verification rejects tampering") {
  const ProductSpace square = uniform_cube(2);
  const auto events = bk_pair(square);
  auto cert = box_occurs_at(square.index_of({1, 1}), events, std::vector<std::size_t>{0, 1});
  REQUIRE(cert.has_value());
  REQUIRE(cert->verify(events));
  cert->witnesses[1] = cert->witnesses[0];  // overlap
  CHECK_FALSE(cert->verify(events));
  cert->witnesses[1] = 0b10;
  cert->witnesses[0] = 0b10;  // wrong coordinate for event 0
  CHECK_FALSE(cert->verify(events));
}
