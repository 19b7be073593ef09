#include "boxkit/event.hpp"

#include <algorithm>
#include <bit>

namespace boxkit {

namespace {

// Membership is monotone along single-coordinate increases, and the product
// order is the transitive closure of those steps, so scanning them decides
// monotonicity without the |Ω|² pair loop.
void scan_monotonicity(const ProductSpace& space, const boost::dynamic_bitset<>& bits,
                       bool& increasing, bool& decreasing) {
  increasing = true;
  decreasing = true;
  const std::size_t n = space.arity();
  const std::uint64_t count = space.outcome_count();
  for (std::uint64_t index = 0; index < count && (increasing || decreasing); ++index) {
    const bool in = bits.test(index);
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = static_cast<std::size_t>(space.coord_of(index, i));
      for (int f : space.factor(i).strictly_above(e)) {
        const std::uint64_t up = index + (static_cast<std::uint64_t>(f) - e) * space.stride(i);
        const bool up_in = bits.test(up);
        if (in && !up_in) increasing = false;
        if (!in && up_in) decreasing = false;
      }
    }
  }
}

}  // namespace

Event::Event(const ProductSpace& space, boost::dynamic_bitset<> bits)
    : space_(&space), bits_(std::move(bits)) {
  space.require_enumerable();
  if (bits_.size() != space.outcome_count())
    throw std::invalid_argument("membership bitset length does not match the outcome count");
  probability_ = space.measure(bits_);
  scan_monotonicity(space, bits_, increasing_, decreasing_);
}

Event Event::from_bits(const ProductSpace& space, boost::dynamic_bitset<> bits) {
  return Event(space, std::move(bits));
}

Event Event::explicit_outcomes(const ProductSpace& space, const std::vector<Outcome>& outcomes) {
  space.require_enumerable();
  boost::dynamic_bitset<> bits(space.outcome_count());
  for (const auto& o : outcomes) bits.set(space.index_of(o));
  return Event(space, std::move(bits));
}

Event Event::up_set(const ProductSpace& space, const std::vector<Outcome>& generators) {
  space.require_enumerable();
  std::vector<std::uint64_t> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(space.index_of(g));
  boost::dynamic_bitset<> bits(space.outcome_count());
  for (std::uint64_t index = 0; index < space.outcome_count(); ++index)
    for (std::uint64_t g : gens)
      if (space.leq_index(g, index)) {
        bits.set(index);
        break;
      }
  Event event(space, std::move(bits));
  if (!event.is_increasing())
    throw std::logic_error("up-set construction produced a non-increasing event");
  return event;
}

Event Event::down_set(const ProductSpace& space, const std::vector<Outcome>& generators) {
  space.require_enumerable();
  std::vector<std::uint64_t> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(space.index_of(g));
  boost::dynamic_bitset<> bits(space.outcome_count());
  for (std::uint64_t index = 0; index < space.outcome_count(); ++index)
    for (std::uint64_t g : gens)
      if (space.leq_index(index, g)) {
        bits.set(index);
        break;
      }
  Event event(space, std::move(bits));
  if (!event.is_decreasing())
    throw std::logic_error("down-set construction produced a non-decreasing event");
  return event;
}

Event Event::cylinder(const ProductSpace& space, std::size_t coord,
                      const std::vector<int>& allowed_elements) {
  space.require_enumerable();
  if (coord >= space.arity())
    throw std::invalid_argument("cylinder coordinate out of range");
  std::vector<char> allowed(space.factor(coord).size(), 0);
  for (int e : allowed_elements) {
    if (e < 0 || e >= static_cast<int>(space.factor(coord).size()))
      throw std::invalid_argument("cylinder element out of range");
    allowed[static_cast<std::size_t>(e)] = 1;
  }
  boost::dynamic_bitset<> bits(space.outcome_count());
  for (std::uint64_t index = 0; index < space.outcome_count(); ++index)
    if (allowed[static_cast<std::size_t>(space.coord_of(index, coord))]) bits.set(index);
  return Event(space, std::move(bits));
}

Event Event::full(const ProductSpace& space) {
  space.require_enumerable();
  boost::dynamic_bitset<> bits(space.outcome_count());
  bits.set();
  return Event(space, std::move(bits));
}

Event Event::none(const ProductSpace& space) {
  space.require_enumerable();
  return Event(space, boost::dynamic_bitset<>(space.outcome_count()));
}

Event Event::operator&(const Event& other) const {
  if (space_ != other.space_) throw std::invalid_argument("events live on different spaces");
  return Event(*space_, bits_ & other.bits_);
}

Event Event::operator|(const Event& other) const {
  if (space_ != other.space_) throw std::invalid_argument("events live on different spaces");
  return Event(*space_, bits_ | other.bits_);
}

Event Event::operator~() const { return Event(*space_, ~bits_); }

bool Event::contains(std::uint64_t outcome_index) const {
  if (outcome_index >= bits_.size())
    throw std::invalid_argument("outcome index out of range for the event's space");
  return bits_.test(outcome_index);
}

bool Event::is_witness_by_enumeration(std::uint64_t outcome_index, CoordSet s) const {
  const std::size_t n = space_->arity();
  if (n > kWitnessCoordCap)
    throw CapExceeded("witness check refused: space has more than " +
                      std::to_string(kWitnessCoordCap) + " coordinates");
  // Base index keeps ω's digits on S; free coordinates are enumerated.
  std::vector<std::size_t> free_coords;
  std::uint64_t base = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s & (CoordSet{1} << i))
      base += static_cast<std::uint64_t>(space_->coord_of(outcome_index, i)) * space_->stride(i);
    else
      free_coords.push_back(i);
  }
  std::uint64_t combos = 1;
  for (std::size_t i : free_coords) combos *= space_->factor(i).size();
  for (std::uint64_t t = 0; t < combos; ++t) {
    std::uint64_t index = base;
    std::uint64_t rem = t;
    for (std::size_t i : free_coords) {
      const std::uint64_t m = space_->factor(i).size();
      index += (rem % m) * space_->stride(i);
      rem /= m;
    }
    if (!bits_.test(index)) return false;
  }
  return true;
}

bool Event::is_witness(std::uint64_t outcome_index, CoordSet s) const {
  if (increasing_ && space_->all_factors_have_unique_minimum()) {
    // ω fixed on S and dropped to the factor minimum elsewhere is the least
    // outcome agreeing with ω on S; membership there decides the witness.
    std::uint64_t least = 0;
    for (std::size_t i = 0; i < space_->arity(); ++i) {
      const std::uint64_t digit = (s & (CoordSet{1} << i))
                                      ? static_cast<std::uint64_t>(space_->coord_of(outcome_index, i))
                                      : space_->factor(i).unique_minimum();
      least += digit * space_->stride(i);
    }
    return bits_.test(least);
  }
  if (decreasing_ && space_->all_factors_have_unique_maximum()) {
    std::uint64_t greatest = 0;
    for (std::size_t i = 0; i < space_->arity(); ++i) {
      const std::uint64_t digit = (s & (CoordSet{1} << i))
                                      ? static_cast<std::uint64_t>(space_->coord_of(outcome_index, i))
                                      : space_->factor(i).unique_maximum();
      greatest += digit * space_->stride(i);
    }
    return bits_.test(greatest);
  }
  return is_witness_by_enumeration(outcome_index, s);
}

std::vector<CoordSet> Event::minimal_witnesses(std::uint64_t outcome_index) const {
  std::vector<CoordSet> minimal;
  if (!contains(outcome_index)) return minimal;
  const std::size_t n = space_->arity();
  if (n > kWitnessCoordCap)
    throw CapExceeded("minimal-witness search refused: space has more than " +
                      std::to_string(kWitnessCoordCap) + " coordinates");
  const CoordSet all = (n == 32) ? ~CoordSet{0} : ((CoordSet{1} << n) - 1);
  // Ascending popcount: any witness that strictly contains an earlier-found
  // minimal set is skipped, so survivors that pass the check are minimal.
  for (std::size_t pc = 0; pc <= n; ++pc) {
    for (CoordSet s = 0;; ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) == pc) {
        bool dominated = false;
        for (CoordSet m : minimal)
          if ((m & s) == m) {
            dominated = true;
            break;
          }
        if (!dominated && is_witness(outcome_index, s)) minimal.push_back(s);
      }
      if (s == all) break;
    }
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool Event::affects(std::size_t coord) const {
  if (coord >= space_->arity()) throw std::invalid_argument("coordinate out of range");
  const std::uint64_t count = space_->outcome_count();
  const std::uint64_t stride = space_->stride(coord);
  const std::size_t m = space_->factor(coord).size();
  for (std::uint64_t index = 0; index < count; ++index) {
    if (space_->coord_of(index, coord) != 0) continue;
    const bool first = bits_.test(index);
    for (std::size_t e = 1; e < m; ++e)
      if (bits_.test(index + e * stride) != first) return true;
  }
  return false;
}

int psi(std::span<const Event> events) {
  require_same_space(events);
  if (events.empty()) return 0;
  const ProductSpace& space = events.front().space();
  int result = 0;
  for (std::size_t i = 0; i < space.arity(); ++i) {
    int touched = 0;
    for (const Event& e : events)
      if (e.affects(i) && ++touched >= 2) break;
    if (touched >= 2) ++result;
  }
  return result;
}

namespace {

// DFS over subfamilies carrying the running intersection; bails out on the
// first product-rule failure.
bool independent_rec(std::span<const Event> events, std::size_t next,
                     const boost::dynamic_bitset<>& inter, const Rat& prod, std::size_t chosen) {
  if (next == events.size()) {
    if (chosen < 2) return true;
    return events.front().space().measure(inter) == prod;
  }
  if (!independent_rec(events, next + 1, inter, prod, chosen)) return false;
  return independent_rec(events, next + 1, inter & events[next].bits(),
                         prod * events[next].probability(), chosen + 1);
}

}  // namespace

bool are_independent(std::span<const Event> events) {
  require_same_space(events);
  if (events.size() > kIndependenceEventCap)
    throw CapExceeded("independence check refused for more than " +
                      std::to_string(kIndependenceEventCap) + " events");
  if (events.size() < 2) return true;
  boost::dynamic_bitset<> all(events.front().space().outcome_count());
  all.set();
  return independent_rec(events, 0, all, Rat(1), 0);
}

Rat intersection_probability(std::span<const Event> events) {
  require_same_space(events);
  if (events.empty()) return Rat(1);
  boost::dynamic_bitset<> inter = events.front().bits();
  for (std::size_t i = 1; i < events.size(); ++i) inter &= events[i].bits();
  return events.front().space().measure(inter);
}

std::vector<boost::dynamic_bitset<>> enumerate_upset_bitsets(const ProductSpace& space,
                                                             std::uint64_t max_outcomes) {
  space.require_enumerable();
  const std::uint64_t count = space.outcome_count();
  if (count > max_outcomes || count > 63)
    throw CapExceeded("exhaustive up-set enumeration refused for " + std::to_string(count) +
                      " outcomes");
  // up_closure[i] = mask of outcomes >= outcome i.
  std::vector<std::uint64_t> up_closure(count, 0);
  for (std::uint64_t a = 0; a < count; ++a)
    for (std::uint64_t b = 0; b < count; ++b)
      if (space.leq_index(a, b)) up_closure[a] |= std::uint64_t{1} << b;
  std::vector<boost::dynamic_bitset<>> result;
  const std::uint64_t all = (count == 63) ? ~std::uint64_t{0} >> 1 : ((std::uint64_t{1} << count) - 1);
  for (std::uint64_t mask = 0;; ++mask) {
    bool up = true;
    for (std::uint64_t rest = mask; rest && up; rest &= rest - 1) {
      const auto i = static_cast<std::uint64_t>(std::countr_zero(rest));
      if ((up_closure[i] & ~mask) != 0) up = false;
    }
    if (up) {
      boost::dynamic_bitset<> bits(count);
      for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        bits.set(static_cast<std::size_t>(std::countr_zero(rest)));
      result.push_back(std::move(bits));
    }
    if (mask == all) break;
  }
  return result;
}

void require_same_space(std::span<const Event> events) {
  for (std::size_t i = 1; i < events.size(); ++i)
    if (&events[i].space() != &events.front().space())
      throw std::invalid_argument("events live on different spaces");
}

}  // namespace boxkit
