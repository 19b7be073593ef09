#include <doctest.h>

#include "boxkit/space.hpp"

using namespace boxkit;

TEST_CASE("canonical Bernoulli factor validates cleanly") {
  const Factor f = Factor::bernoulli(Rat(1, 2));
  CHECK(f.validate().ok());
  CHECK(f.is_linear());
  CHECK(f.has_unique_minimum());
  CHECK(f.unique_minimum() == 0);
  CHECK(f.leq(0, 1));
  CHECK_FALSE(f.leq(1, 0));
}

TEST_CASE("weight normalization failure is reported, not thrown") {
  const Factor f({"0", "1"}, {{"0", "1"}}, {Rat(1, 2), Rat(1, 3)});
  const auto report = f.validate();
  REQUIRE_FALSE(report.ok());
  CHECK(report.to_string().find("weights sum to 5/6 != 1") != std::string::npos);
}

TEST_CASE("negative weights are reported") {
  const Factor f({"0", "1"}, {{"0", "1"}}, {Rat(3, 2), Rat(-1, 2)});
  const auto report = f.validate();
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) found = found || v.find("negative") != std::string::npos;
  CHECK(found);
}

TEST_CASE("antisymmetry violation is reported") {
  const Factor f({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {Rat(1, 2), Rat(1, 2)});
  const auto report = f.validate();
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    found = found || v.find("antisymmetry") != std::string::npos;
  CHECK(found);
}

TEST_CASE("zero-weight elements are allowed") {
  const Factor f = Factor::chain({Rat(0), Rat(1)});
  CHECK(f.validate().ok());
}

TEST_CASE("is_linear distinguishes chains from antichains") {
  CHECK(Factor::bernoulli(Rat(1, 2)).is_linear());
  CHECK(Factor::chain({Rat(1, 3), Rat(1, 3), Rat(1, 3)}).is_linear());
  CHECK_FALSE(Factor::antichain({Rat(1, 2), Rat(1, 2)}).is_linear());
  CHECK_FALSE(Factor::diamond(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)).is_linear());
}

TEST_CASE("positive association: linear always, uniform antichain never") {
  CHECK(Factor::bernoulli(Rat(1, 7)).is_positively_associated());
  CHECK(Factor::chain({Rat(1, 6), Rat(1, 3), Rat(1, 2)}).is_positively_associated());
  // A = {a}, B = {b}: m(A cap B) = 0 < 1/4.
  CHECK_FALSE(Factor::antichain({Rat(1, 2), Rat(1, 2)}).is_positively_associated());
  // Single element: only up-sets are the empty set and the whole factor.
  CHECK(Factor::chain({Rat(1)}).is_positively_associated());
}

TEST_CASE("PA check refuses oversized factors") {
  std::vector<Rat> weights(13, Rat(1, 13));
  CHECK_THROWS_AS(Factor::antichain(weights).is_positively_associated(), CapExceeded);
}

TEST_CASE("product order on two Bernoulli chains") {
  const ProductSpace space({Factor::bernoulli(Rat(1, 2)), Factor::bernoulli(Rat(1, 2))});
  CHECK(space.leq({0, 0}, {1, 1}));
  CHECK_FALSE(space.leq({0, 1}, {1, 0}));
  CHECK_FALSE(space.leq({1, 0}, {0, 1}));
  CHECK(space.leq({1, 0}, {1, 0}));
  CHECK_THROWS_AS(space.leq({0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("lexicographic enumeration order and measures") {
  const ProductSpace space({Factor::bernoulli(Rat(1, 2)), Factor::bernoulli(Rat(1, 2))});
  REQUIRE(space.outcome_count() == 4);
  CHECK(space.outcome_of(0) == Outcome{0, 0});
  CHECK(space.outcome_of(1) == Outcome{0, 1});
  CHECK(space.outcome_of(2) == Outcome{1, 0});
  CHECK(space.outcome_of(3) == Outcome{1, 1});
  CHECK(space.index_of({1, 1}) == 3);

  Rat total = 0;
  for_each_outcome(space, [&](std::uint64_t, const Rat& w) { total += w; });
  CHECK(total == 1);
  CHECK(space.outcome_weight(3) == Rat(1, 4));
}

TEST_CASE("cylinder measure over a weighted first factor") {
  const ProductSpace space({Factor::bernoulli(Rat(2, 3)), Factor::bernoulli(Rat(1, 2))});
  // First coordinate = "0" carries weight 1/3 regardless of the second.
  const std::vector<std::uint64_t> cyl = {space.index_of({0, 0}), space.index_of({0, 1})};
  CHECK(space.measure(cyl) == Rat(1, 3));
}

TEST_CASE("single factor with three elements enumerates three outcomes") {
  const ProductSpace space({Factor::chain({Rat(1, 3), Rat(1, 3), Rat(1, 3)})});
  CHECK(space.outcome_count() == 3);
}

TEST_CASE("three Bernoulli coordinates give eight outcomes") {
  const ProductSpace space(std::vector<Factor>(3, Factor::bernoulli(Rat(1, 2))));
  CHECK(space.outcome_count() == 8);
}

TEST_CASE("enumeration cap is a hard error") {
  const ProductSpace space(std::vector<Factor>(25, Factor::bernoulli(Rat(1, 2))));
  CHECK_FALSE(space.enumerable());
  CHECK_THROWS_AS(space.require_enumerable(), CapExceeded);
}

TEST_CASE("product order axioms hold exhaustively on a small mixed space") {
  const ProductSpace space(
      {Factor::chain({Rat(1, 2), Rat(1, 2)}), Factor::diamond(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)),
       Factor::chain({Rat(1, 3), Rat(2, 3)})});
  const std::uint64_t n = space.outcome_count();
  REQUIRE(n <= 64);
  for (std::uint64_t a = 0; a < n; ++a) {
    CHECK(space.leq_index(a, a));
    for (std::uint64_t b = 0; b < n; ++b) {
      if (a != b && space.leq_index(a, b)) CHECK_FALSE(space.leq_index(b, a));
      for (std::uint64_t c = 0; c < n; ++c)
        if (space.leq_index(a, b) && space.leq_index(b, c)) CHECK(space.leq_index(a, c));
    }
  }
}

TEST_CASE("measure is additive and monotone") {
  const ProductSpace space({Factor::bernoulli(Rat(1, 3)), Factor::bernoulli(Rat(1, 5))});
  boost::dynamic_bitset<> a(4), b(4), both(4);
  a.set(0);
  a.set(2);
  b.set(1);
  both = a | b;
  CHECK(space.measure(a) + space.measure(b) == space.measure(both));
  CHECK(space.measure(a) <= space.measure(both));
}

TEST_CASE("space validation aggregates factor reports") {
  const ProductSpace space({Factor::bernoulli(Rat(1, 2)),
                            Factor({"0", "1"}, {}, {Rat(1, 2), Rat(1, 3)})});
  const auto report = space.validate();
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().find("factor 2") != std::string::npos);
}
