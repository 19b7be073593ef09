#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boxkit/common.hpp"
#include "boxkit/rational.hpp"
#include "boxkit/space.hpp"

namespace boxkit {

// The inclusion-minimal witness sets of one outcome's membership in an
// event. The sets form an antichain and every witness set is a superset of
// some listed set.
struct MinimalWitnessFamily {
  std::uint64_t outcome_index = 0;
  std::vector<CoordSet> sets;  // sorted by ascending bitmask value
};

// An event over a product space, materialized as a membership bitset over
// the enumerated outcomes. Immutable after construction; all queries are
// pure. The space must outlive the event.
class Event {
 public:
  static Event from_bits(const ProductSpace& space, boost::dynamic_bitset<> bits);
  static Event explicit_outcomes(const ProductSpace& space, const std::vector<Outcome>& outcomes);
  // Up-closure of the generators; the result is increasing by construction
  // (and verified).
  static Event up_set(const ProductSpace& space, const std::vector<Outcome>& generators);
  static Event down_set(const ProductSpace& space, const std::vector<Outcome>& generators);
  // {ω : ω_coord ∈ allowed}; coord is 0-based here (1-based only in files).
  static Event cylinder(const ProductSpace& space, std::size_t coord,
                        const std::vector<int>& allowed_elements);
  static Event full(const ProductSpace& space);
  static Event none(const ProductSpace& space);

  Event operator&(const Event& other) const;
  Event operator|(const Event& other) const;
  Event operator~() const;

  const ProductSpace& space() const { return *space_; }
  const boost::dynamic_bitset<>& bits() const { return bits_; }
  std::uint64_t member_count() const { return bits_.count(); }

  bool contains(std::uint64_t outcome_index) const;
  bool contains(const Outcome& outcome) const { return contains(space_->index_of(outcome)); }

  const Rat& probability() const { return probability_; }

  bool is_increasing() const { return increasing_; }
  bool is_decreasing() const { return decreasing_; }

  // True iff every outcome agreeing with ω on S lies in the event. Uses the
  // factor-minimum (resp. maximum) shortcut when the event is increasing
  // (resp. decreasing) and the shortcut's hypothesis holds; otherwise falls
  // back to sub-product enumeration.
  bool is_witness(std::uint64_t outcome_index, CoordSet s) const;
  bool is_witness(const Outcome& outcome, CoordSet s) const {
    return is_witness(space_->index_of(outcome), s);
  }
  // The defining enumeration, with no shortcut. Kept callable so the
  // shortcut can be tested against it.
  bool is_witness_by_enumeration(std::uint64_t outcome_index, CoordSet s) const;

  std::vector<CoordSet> minimal_witnesses(std::uint64_t outcome_index) const;
  std::vector<CoordSet> minimal_witnesses(const Outcome& outcome) const {
    return minimal_witnesses(space_->index_of(outcome));
  }
  MinimalWitnessFamily minimal_witness_family(std::uint64_t outcome_index) const {
    return {outcome_index, minimal_witnesses(outcome_index)};
  }

  // True iff some member and some non-member agree everywhere off coord.
  bool affects(std::size_t coord) const;

 private:
  Event(const ProductSpace& space, boost::dynamic_bitset<> bits);

  const ProductSpace* space_;
  boost::dynamic_bitset<> bits_;
  Rat probability_;
  bool increasing_ = false;
  bool decreasing_ = false;
};

// Number of coordinates affecting at least two of the listed events.
int psi(std::span<const Event> events);

// Mutual independence: every subfamily satisfies the exact product rule.
// Throws CapExceeded above kIndependenceEventCap events.
bool are_independent(std::span<const Event> events);

// μ(∩ events); the full space for an empty list.
Rat intersection_probability(std::span<const Event> events);

// All increasing events of the space, as membership bitsets. Exhaustive;
// requires at most max_outcomes outcomes (default 2^16 masks => 16 outcomes).
std::vector<boost::dynamic_bitset<>> enumerate_upset_bitsets(const ProductSpace& space,
                                                             std::uint64_t max_outcomes = 16);

void require_same_space(std::span<const Event> events);

}  // namespace boxkit
