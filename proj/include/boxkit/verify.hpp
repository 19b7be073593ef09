#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "boxkit/disjoint.hpp"
#include "boxkit/event.hpp"

namespace boxkit::verify {

// One verification corpus: how many instances ran, how many violated the
// property, and a serialized minimal counterexample for the first violation.
struct SuiteResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::string first_counterexample;

  bool passed() const { return violations == 0; }
};

struct Theorem1Options {
  unsigned max_coords = 3;
  unsigned max_family = 3;
  // Mutation hook for testing the detector itself: also sweeps spaces with a
  // uniform two-element antichain factor, which is not positively associated.
  bool include_non_pa_factor = false;
  // Fold in the psi = 0 exactness check (laws of X and Y agree).
  bool check_psi_zero = true;
};

// Exhaustive X ≼ Y over every product of uniform and (1/3, 2/3) Bernoulli
// factors with n <= max_coords, and every ordered family of <= max_family
// increasing events (all up-sets), plus the mirrored all-decreasing sweep.
SuiteResult theorem1_exhaustive(const Theorem1Options& options);

// Same domination sweep over diamond-poset factors with three weightings
// that pass the exact positive-association check.
SuiteResult theorem1_pa_diamond(unsigned max_coords = 2, unsigned max_family = 2);

// Randomized domination samples on larger linear factors (chains up to
// max_factor_size, random exact weights, random up-set families).
SuiteResult theorem1_random_chains(std::uint64_t instances, std::uint64_t seed,
                                   unsigned max_coords = 3, unsigned max_factor_size = 3,
                                   unsigned max_family = 3);

// mu(A box B) <= mu(A) mu(B) for all ordered pairs of increasing events on
// uniform {0,1}^n, n <= max_coords.
SuiteResult bk_recovery(unsigned max_coords = 3);

// mu(box of the family) <= product of probabilities for arbitrary events on
// linearly ordered factors: exhaustive over all 256 pairs on uniform
// {0,1}^2, plus seeded random triples on uniform {0,1}^3.
SuiteResult reimer_induction(std::uint64_t random_triples, std::uint64_t seed);

// Exact Pr(X >= lambda+t) <= exp[-lambda phi(t/lambda)] for every integer
// t >= 1 over seeded random instances (arbitrary events, linear factors,
// n <= 3, k <= 4). Float comparisons get 1e-12 slack in the bound's favor.
SuiteResult chernoff_tail_random(std::uint64_t instances, std::uint64_t seed);

// Same corpus (same seed => same instances) for Z and the Janson bound,
// plus extra instances with non-linear factors, which Z's bound tolerates.
SuiteResult jub_tail_random(std::uint64_t instances, std::uint64_t seed);

// For mutually independent increasing events, the box of every subfamily
// has exactly the measure of its intersection. Cylinder-built families plus
// every independent up-set pair on uniform {0,1}^n, n <= max_coords.
SuiteResult harris_disjointness(unsigned max_coords = 3);

// x_at against the definition-level oracle that enumerates all witness
// systems over all coordinate subsets.
SuiteResult x_oracle_random(std::uint64_t instances, std::uint64_t seed);

// max_disjoint_connected_pairs against x_at on path events, over every
// configuration of small host graphs (up to 12 edges).
SuiteResult percolation_specialization();

// product <= chernoff <= bernstein <= 1 on the lambda-t grid, and the
// quadrature identity |integral - (-lambda phi(t/lambda))| < 1e-9.
SuiteResult bounds_grid();

// The definition-level oracle behind x_oracle_random: enumerates every
// witness system over all 2^n-subset tuples, using only membership queries.
int x_at_bruteforce(std::span<const Event> events, std::uint64_t outcome_index);

// A self-owned random instance (the space must outlive the events).
struct Instance {
  std::unique_ptr<ProductSpace> space;
  std::vector<Event> events;
};

struct VerifyBudgets {
  unsigned max_coords = 3;
  unsigned max_factor_size = 3;
  unsigned max_family = 3;
  std::uint64_t random_instances = 10000;
  std::uint64_t seed = 0;
  bool include_non_pa_factor = false;
};

std::vector<SuiteResult> run_suites(const VerifyBudgets& budgets);

}  // namespace boxkit::verify
