#pragma once

#include <cstddef>
#include <vector>

#include "boxkit/rational.hpp"

namespace boxkit {

// An exact pmf over {0, ..., k}.
class CountDistribution {
 public:
  // Validates that the values are nonnegative and sum to exactly 1.
  explicit CountDistribution(std::vector<Rat> pmf);

  std::size_t max_count() const { return pmf_.size() - 1; }
  const Rat& pmf(std::size_t j) const { return pmf_[j]; }
  const std::vector<Rat>& pmf() const { return pmf_; }

  // Pr(C >= r) for integer r; 1 for r <= 0.
  Rat survival(long long r) const;
  // Pr(C >= x) for a real (rational) threshold.
  Rat survival_at(const Rat& x) const;
  Rat mean() const;

  bool operator==(const CountDistribution& other) const { return pmf_ == other.pmf_; }

 private:
  std::vector<Rat> pmf_;
};

// Exact Poisson-binomial law of a sum of independent Bernoullis via the
// convolution recurrence. Throws std::domain_error for p outside [0, 1].
CountDistribution poisson_binomial(const std::vector<Rat>& probs);

// True iff upper stochastically dominates lower: the survival function of
// `lower` never exceeds that of `upper` at any integer threshold.
bool stochastically_dominates(const CountDistribution& lower, const CountDistribution& upper);

}  // namespace boxkit
