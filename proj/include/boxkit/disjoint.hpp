#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boxkit/distribution.hpp"
#include "boxkit/event.hpp"

namespace boxkit {

// A verifiable proof that the events indexed by `indices` occur disjointly
// at the outcome: one witness set per index, pairwise disjoint.
struct DisjointnessCertificate {
  std::uint64_t outcome_index = 0;
  std::vector<std::size_t> indices;   // sorted subset of [k] (0-based)
  std::vector<CoordSet> witnesses;    // aligned with indices

  // Independent re-check: pairwise disjointness plus is_witness per entry.
  bool verify(std::span<const Event> events) const;
};

// The maximum number of pairwise-disjoint witness sets, one per family, that
// can be chosen from the given minimal-witness families. An empty family
// means that event cannot participate. Exact branch-and-bound.
int max_disjoint_pack(std::span<const std::vector<CoordSet>> families);

// True iff one witness per family can be chosen, all pairwise disjoint.
bool can_pack_all(std::span<const std::vector<CoordSet>> families);

// Searches for pairwise-disjoint witnesses for every event indexed by I.
// When several systems exist, returns the one with the lexicographically
// smallest witness-bitmask sequence over the sorted index set.
std::optional<DisjointnessCertificate> box_occurs_at(std::uint64_t outcome_index,
                                                     std::span<const Event> events,
                                                     std::span<const std::size_t> index_set);

// The event {ω : the indexed events occur disjointly at ω}.
Event box_event(std::span<const Event> events, std::span<const std::size_t> index_set);
Event box_event(std::span<const Event> events);  // all of them

// Max |I| admitting a disjoint witness system at the outcome.
int x_at(std::span<const Event> events, std::uint64_t outcome_index);

// Exact law of X under the product measure.
CountDistribution x_distribution(std::span<const Event> events, unsigned threads = 1);

// Law of the Bernoulli-sum comparison variable Y.
CountDistribution y_distribution(const std::vector<Rat>& probs);

// Max size of a mutually independent subfamily all of whose events contain
// the outcome. Throws CapExceeded above kIndependenceEventCap events.
int z_at(std::span<const Event> events, std::uint64_t outcome_index);

// Exact law of Z.
CountDistribution z_distribution(std::span<const Event> events, unsigned threads = 1);

}  // namespace boxkit
