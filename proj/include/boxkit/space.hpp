#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/common.hpp"
#include "boxkit/rational.hpp"

namespace boxkit {

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// A finite partially ordered set with a probability weight per element.
// The order is given as covering pairs and stored reflexively and
// transitively closed, so leq() is a table lookup.
class Factor {
 public:
  Factor(std::vector<std::string> elements,
         std::vector<std::pair<std::string, std::string>> order_pairs,
         std::vector<Rat> weights);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  // -1 when the label is unknown.
  int index_of(const std::string& label) const;
  const Rat& weight(std::size_t element) const { return weights_[element]; }
  const std::vector<Rat>& weights() const { return weights_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }

  // Reports every violated axiom; never throws.
  ValidationReport validate() const;

  // True iff every pair of elements is comparable.
  bool is_linear() const;

  // Exhaustive check of m(A∩B) ≥ m(A)m(B) over all pairs of up-sets.
  // Throws CapExceeded for factors larger than kPaFactorCap.
  bool is_positively_associated() const;

  bool has_unique_minimum() const { return unique_min_ >= 0; }
  std::size_t unique_minimum() const { return static_cast<std::size_t>(unique_min_); }
  bool has_unique_maximum() const { return unique_max_ >= 0; }
  std::size_t unique_maximum() const { return static_cast<std::size_t>(unique_max_); }

  // Elements strictly above e.
  const std::vector<int>& strictly_above(std::size_t e) const { return above_[e]; }

  // Convenience builders.
  static Factor chain(std::vector<Rat> weights);           // 0 < 1 < ... labels "0","1",...
  static Factor bernoulli(const Rat& p_one);               // chain 0 < 1, weight(1) = p
  static Factor antichain(std::vector<Rat> weights);       // no relations
  static Factor diamond(const Rat& w_bot, const Rat& w_m1, const Rat& w_m2, const Rat& w_top);

 private:
  std::vector<std::string> elements_;
  std::vector<Rat> weights_;
  std::vector<char> leq_;          // size m*m, reflexive-transitive closure
  std::vector<std::vector<int>> above_;
  std::vector<std::string> structural_violations_;
  int unique_min_ = -1;
  int unique_max_ = -1;
};

// An ordered list of factors with the product (coordinatewise) order and the
// product measure. Outcomes are addressed by their lexicographic rank, the
// first coordinate being most significant.
class ProductSpace {
 public:
  explicit ProductSpace(std::vector<Factor> factors);

  std::size_t arity() const { return factors_.size(); }
  const Factor& factor(std::size_t i) const { return factors_[i]; }
  const std::vector<Factor>& factors() const { return factors_; }

  std::uint64_t outcome_count() const { return outcome_count_; }
  bool enumerable() const { return !too_large_ && outcome_count_ <= kOutcomeCap; }
  // Throws CapExceeded when the space exceeds kOutcomeCap.
  void require_enumerable() const;

  ValidationReport validate() const;

  std::uint64_t stride(std::size_t i) const { return strides_[i]; }
  int coord_of(std::uint64_t index, std::size_t i) const {
    return static_cast<int>((index / strides_[i]) % factors_[i].size());
  }
  Outcome outcome_of(std::uint64_t index) const;
  // Validates ranges; throws std::invalid_argument on dimension mismatch or
  // an out-of-range element index.
  std::uint64_t index_of(const Outcome& coords) const;

  // Product order. Throws std::invalid_argument on dimension mismatch.
  bool leq(const Outcome& a, const Outcome& b) const;
  bool leq_index(std::uint64_t a, std::uint64_t b) const;

  Rat outcome_weight(std::uint64_t index) const;
  // Exact measure of an explicit outcome set (bitset over outcome ranks).
  Rat measure(const boost::dynamic_bitset<>& outcomes) const;
  Rat measure(std::span<const std::uint64_t> outcome_indices) const;

  bool all_factors_have_unique_minimum() const;
  bool all_factors_have_unique_maximum() const;

 private:
  std::vector<Factor> factors_;
  std::vector<std::uint64_t> strides_;
  std::vector<Rat> weight_cache_;  // filled for small spaces
  std::uint64_t outcome_count_ = 1;
  bool too_large_ = false;
};

// Walks every outcome of the space in lexicographic order, maintaining the
// exact product weight incrementally; fn(index, weight) is called once per
// outcome. This is the enumeration primitive behind measures and pmfs.
template <class Fn>
void for_each_outcome(const ProductSpace& space, Fn&& fn) {
  space.require_enumerable();
  const std::size_t n = space.arity();
  Outcome digits(n, 0);
  // prefix[i] = product of weights of digits[0..i); prefix[0] = 1.
  std::vector<Rat> prefix(n + 1);
  prefix[0] = 1;
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * space.factor(i).weight(0);
  const std::uint64_t count = space.outcome_count();
  for (std::uint64_t index = 0;; ++index) {
    fn(index, prefix[n]);
    if (index + 1 == count) break;
    // Odometer increment: bump the last coordinate that can move.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (digits[i] + 1 < static_cast<int>(space.factor(i).size())) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
    }
    for (std::size_t j = i; j < n; ++j)
      prefix[j + 1] = prefix[j] * space.factor(j).weight(static_cast<std::size_t>(digits[j]));
  }
}

}  // namespace boxkit
