#include "boxkit/distribution.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxkit {

CountDistribution::CountDistribution(std::vector<Rat> pmf) : pmf_(std::move(pmf)) {
  if (pmf_.empty()) throw std::invalid_argument("a count distribution needs support {0}");
  Rat sum = 0;
  for (const Rat& p : pmf_) {
    if (p < 0) throw std::invalid_argument("negative pmf value");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("pmf sums to " + to_string(sum) + " != 1");
}

Rat CountDistribution::survival(long long r) const {
  if (r <= 0) return Rat(1);
  Rat tail = 0;
  for (std::size_t j = static_cast<std::size_t>(std::min<long long>(r, pmf_.size()));
       j <= max_count(); ++j)
    tail += pmf_[j];
  return tail;
}

Rat CountDistribution::survival_at(const Rat& x) const {
  Rat tail = 0;
  for (std::size_t j = 0; j <= max_count(); ++j)
    if (Rat(j) >= x) tail += pmf_[j];
  return tail;
}

Rat CountDistribution::mean() const {
  Rat m = 0;
  for (std::size_t j = 1; j <= max_count(); ++j) m += Rat(j) * pmf_[j];
  return m;
}

CountDistribution poisson_binomial(const std::vector<Rat>& probs) {
  for (const Rat& p : probs)
    if (p < 0 || p > 1) throw std::domain_error("Bernoulli probability outside [0, 1]");
  std::vector<Rat> pmf(probs.size() + 1);
  pmf[0] = 1;
  std::size_t filled = 0;
  for (const Rat& p : probs) {
    ++filled;
    for (std::size_t j = filled; j > 0; --j)
      pmf[j] = pmf[j] * (Rat(1) - p) + pmf[j - 1] * p;
    pmf[0] *= Rat(1) - p;
  }
  return CountDistribution(std::move(pmf));
}

bool stochastically_dominates(const CountDistribution& lower, const CountDistribution& upper) {
  const std::size_t top = std::max(lower.max_count(), upper.max_count());
  for (std::size_t r = 1; r <= top; ++r)
    if (lower.survival(static_cast<long long>(r)) > upper.survival(static_cast<long long>(r)))
      return false;
  return true;
}

}  // namespace boxkit
