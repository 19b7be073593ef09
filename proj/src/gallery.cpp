#include "boxkit/gallery.hpp"

#include <numeric>
#include <stdexcept>

#include "boxkit/disjoint.hpp"
#include "boxkit/event.hpp"
#include "boxkit/space.hpp"

namespace boxkit::gallery {

namespace {

struct Checker {
  std::ostream& out;
  bool ok = true;

  void fact(bool holds, const std::string& text) {
    out << (holds ? "  [ok]   " : "  [FAIL] ") << text << '\n';
    ok = ok && holds;
  }
  void note(const std::string& text) { out << "  " << text << '\n'; }
};

// Uniform {0,1} with A1 = {0}, A2 = {1}: one non-monotone pair is enough to
// sink the domination, even though each event alone is monotone.
bool remark_ii(std::ostream& out) {
  out << "case remark-ii: X is not dominated by Y without the monotone hypothesis\n";
  const ProductSpace space({Factor::bernoulli(Rat(1, 2))});
  const std::vector<Event> events = {Event::explicit_outcomes(space, {{0}}),
                                     Event::explicit_outcomes(space, {{1}})};
  Checker c{out};
  const CountDistribution x = x_distribution(events);
  const CountDistribution y = y_distribution({events[0].probability(), events[1].probability()});
  c.note("A1 = {0}, A2 = {1} on uniform {0,1}; Pr(A1) = Pr(A2) = 1/2");
  c.fact(x.survival(1) == 1, "Pr(X >= 1) = " + to_string(x.survival(1)) + " (expected 1)");
  c.fact(y.survival(1) == Rat(3, 4), "Pr(Y >= 1) = " + to_string(y.survival(1)) + " (expected 3/4)");
  c.fact(!stochastically_dominates(x, y), "X is not stochastically dominated by Y");
  const bool all_increasing = events[0].is_increasing() && events[1].is_increasing();
  const bool all_decreasing = events[0].is_decreasing() && events[1].is_decreasing();
  c.fact(!all_increasing && !all_decreasing,
         "hypothesis check: events are not all increasing nor all decreasing");
  return c.ok;
}

// Same instance shows Z is not dominated by Y either: a singleton family is
// always independent, so Z >= 1 almost surely.
bool remark_iv(std::ostream& out) {
  out << "case remark-iv: Z is not dominated by Y in general\n";
  const ProductSpace space({Factor::bernoulli(Rat(1, 2))});
  const std::vector<Event> events = {Event::explicit_outcomes(space, {{0}}),
                                     Event::explicit_outcomes(space, {{1}})};
  Checker c{out};
  const CountDistribution z = z_distribution(events);
  const CountDistribution y = y_distribution({events[0].probability(), events[1].probability()});
  c.fact(z.survival(1) == 1, "Pr(Z >= 1) = " + to_string(z.survival(1)) + " (expected 1)");
  c.fact(y.survival(1) == Rat(3, 4), "Pr(Y >= 1) = " + to_string(y.survival(1)) + " (expected 3/4)");
  c.fact(!stochastically_dominates(z, y), "Z is not stochastically dominated by Y");
  return c.ok;
}

// A_i = {w_i != w_n} on uniform {0,1}^n: a fully independent family whose
// members can never occur disjointly two at a time, since every witness
// must pin coordinate n.
bool theorem2_example(std::ostream& out, unsigned n) {
  out << "case theorem2-example (n = " << n << "): X <= 1 while Z reaches " << (n - 1) << "\n";
  std::vector<Factor> factors(n, Factor::bernoulli(Rat(1, 2)));
  const ProductSpace space(std::move(factors));
  std::vector<Event> events;
  for (unsigned i = 0; i + 1 < n; ++i) {
    boost::dynamic_bitset<> bits(space.outcome_count());
    for (std::uint64_t w = 0; w < space.outcome_count(); ++w)
      if (space.coord_of(w, i) != space.coord_of(w, n - 1)) bits.set(w);
    events.push_back(Event::from_bits(space, std::move(bits)));
  }
  Checker c{out};
  int max_x = 0;
  for (std::uint64_t w = 0; w < space.outcome_count(); ++w)
    max_x = std::max(max_x, x_at(events, w));
  c.fact(max_x == 1, "max over all outcomes of X = " + std::to_string(max_x) + " (expected 1)");
  c.fact(are_independent(events), "the full family is mutually independent");
  const CountDistribution z = z_distribution(events);
  const Rat top = z.pmf(n - 1);
  c.fact(top > 0, "Pr(Z = " + std::to_string(n - 1) + ") = " + to_string(top) + " > 0");
  c.fact(top == Rat(1) / rational_pow(Rat(2), n - 1),
         "exactly 2^-(n-1): both all-different outcomes realize it");
  return c.ok;
}

// Independent increasing events occur disjointly whenever they occur: the
// box of every subfamily has exactly the measure of its intersection.
bool harris(std::ostream& out) {
  out << "case harris: independent increasing events necessarily occur disjointly\n";
  const ProductSpace space(std::vector<Factor>(3, Factor::bernoulli(Rat(1, 2))));
  std::vector<Event> events;
  for (unsigned i = 0; i < 3; ++i) events.push_back(Event::cylinder(space, i, {1}));
  Checker c{out};
  c.fact(are_independent(events), "the three coordinate cylinders are mutually independent");
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<std::size_t> subset;
    std::vector<Event> chosen;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i)) {
        subset.push_back(i);
        chosen.push_back(events[i]);
      }
    const Rat box_measure = box_event(events, subset).probability();
    const Rat inter = intersection_probability(chosen);
    c.fact(box_measure == inter, "subfamily {" + std::to_string(mask) + "}: mu(box) = " +
                                     to_string(box_measure) + " = mu(intersection)");
  }
  return c.ok;
}

// The two-event inequality over every increasing pair on uniform {0,1}^2.
bool bk_recovery_case(std::ostream& out) {
  out << "case bk-recovery: mu(A box B) <= mu(A) mu(B) for increasing pairs on {0,1}^2\n";
  const ProductSpace space(std::vector<Factor>(2, Factor::bernoulli(Rat(1, 2))));
  const auto upsets = enumerate_upset_bitsets(space);
  std::vector<Event> pool;
  for (const auto& bits : upsets) pool.push_back(Event::from_bits(space, bits));
  Checker c{out};
  int checked = 0, equalities = 0;
  bool all_hold = true;
  for (const Event& a : pool)
    for (const Event& b : pool) {
      const std::vector<Event> pair = {a, b};
      const Rat box_measure = box_event(pair).probability();
      const Rat product = a.probability() * b.probability();
      ++checked;
      if (box_measure == product) ++equalities;
      all_hold = all_hold && box_measure <= product;
    }
  c.fact(checked == 36, "checked " + std::to_string(checked) + " ordered increasing pairs");
  c.fact(all_hold, "the inequality holds in every pair");
  c.note("pairs achieving equality (independent cylinders among them): " +
         std::to_string(equalities));
  return c.ok && all_hold;
}

}  // namespace

std::vector<std::string> case_names() {
  return {"remark-ii", "remark-iv", "theorem2-example", "harris", "bk-recovery"};
}

bool run(const std::string& name, std::ostream& out) {
  if (name == "remark-ii") return remark_ii(out);
  if (name == "remark-iv") return remark_iv(out);
  if (name == "theorem2-example") return theorem2_example(out, 5);
  if (name == "harris") return harris(out);
  if (name == "bk-recovery") return bk_recovery_case(out);
  throw std::invalid_argument("unknown gallery case '" + name + "'");
}

}  // namespace boxkit::gallery
