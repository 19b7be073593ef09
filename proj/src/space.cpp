#include "boxkit/space.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace boxkit {

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) out << v << '\n';
  return out.str();
}

Factor::Factor(std::vector<std::string> elements,
               std::vector<std::pair<std::string, std::string>> order_pairs,
               std::vector<Rat> weights)
    : elements_(std::move(elements)), weights_(std::move(weights)) {
  const std::size_t m = elements_.size();
  if (m == 0) structural_violations_.push_back("factor has no elements");
  if (weights_.size() != m)
    throw std::invalid_argument("factor weight count does not match element count");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (elements_[i] == elements_[j])
        structural_violations_.push_back("duplicate element label '" + elements_[i] + "'");

  leq_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) leq_[i * m + i] = 1;
  for (const auto& [a, b] : order_pairs) {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) {
      structural_violations_.push_back("order pair (" + a + "," + b + ") names an unknown element");
      continue;
    }
    leq_[static_cast<std::size_t>(ia) * m + static_cast<std::size_t>(ib)] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (leq_[i * m + k])
        for (std::size_t j = 0; j < m; ++j)
          if (leq_[k * m + j]) leq_[i * m + j] = 1;

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (leq_[i * m + j] && leq_[j * m + i])
        structural_violations_.push_back("antisymmetry violated: " + elements_[i] + " <= " +
                                         elements_[j] + " <= " + elements_[i]);

  above_.resize(m);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f)
      if (f != e && leq_[e * m + f]) above_[e].push_back(static_cast<int>(f));

  // e is the unique minimum iff e <= f for all f; dually for the maximum.
  int min_count = 0, max_count = 0;
  for (std::size_t e = 0; e < m; ++e) {
    bool is_min = true, is_max = true;
    for (std::size_t f = 0; f < m; ++f) {
      if (!leq_[e * m + f]) is_min = false;
      if (!leq_[f * m + e]) is_max = false;
    }
    if (is_min) {
      unique_min_ = static_cast<int>(e);
      ++min_count;
    }
    if (is_max) {
      unique_max_ = static_cast<int>(e);
      ++max_count;
    }
  }
  // With antisymmetry intact there is at most one of each; a broken order can
  // produce several, in which case the factor fails validation anyway.
  if (min_count > 1) unique_min_ = -1;
  if (max_count > 1) unique_max_ = -1;
}

int Factor::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == label) return static_cast<int>(i);
  return -1;
}

ValidationReport Factor::validate() const {
  ValidationReport report;
  report.violations = structural_violations_;
  Rat sum = 0;
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    if (weights_[e] < 0)
      report.violations.push_back("weight of '" + elements_[e] + "' is negative (" +
                                  boxkit::to_string(weights_[e]) + ")");
    sum += weights_[e];
  }
  if (sum != 1)
    report.violations.push_back("weights sum to " + boxkit::to_string(sum) + " != 1");
  return report;
}

bool Factor::is_linear() const {
  const std::size_t m = size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!leq_[i * m + j] && !leq_[j * m + i]) return false;
  return true;
}

bool Factor::is_positively_associated() const {
  const std::size_t m = size();
  if (m > kPaFactorCap)
    throw CapExceeded("factor too large for exhaustive PA check (" + std::to_string(m) + " > " +
                      std::to_string(kPaFactorCap) + " elements)");
  // up_closure[e] = bitmask of {f : e <= f}.
  std::vector<std::uint32_t> up_closure(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    up_closure[e] |= std::uint32_t{1} << e;
    for (int f : above_[e]) up_closure[e] |= std::uint32_t{1} << static_cast<unsigned>(f);
  }
  const std::uint32_t all = (m == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << m) - 1);
  // Exact measure of every subset via subset-sum DP.
  std::vector<Rat> mass(std::size_t{1} << m);
  mass[0] = 0;
  for (std::uint32_t s = 1; s <= all; ++s) {
    const std::uint32_t low = s & (~s + 1);
    mass[s] = mass[s ^ low] + weights_[static_cast<std::size_t>(std::countr_zero(low))];
  }
  std::vector<std::uint32_t> upsets;
  for (std::uint32_t s = 0; s <= all; ++s) {
    bool up = true;
    for (std::uint32_t rest = s; rest && up; rest &= rest - 1) {
      const auto e = static_cast<std::size_t>(std::countr_zero(rest));
      if ((up_closure[e] & ~s) != 0) up = false;
    }
    if (up) upsets.push_back(s);
    if (s == all) break;
  }
  for (std::size_t i = 0; i < upsets.size(); ++i)
    for (std::size_t j = i; j < upsets.size(); ++j)
      if (mass[upsets[i] & upsets[j]] < mass[upsets[i]] * mass[upsets[j]]) return false;
  return true;
}

Factor Factor::chain(std::vector<Rat> weights) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < weights.size(); ++i) labels.push_back(std::to_string(i));
  for (std::size_t i = 0; i + 1 < weights.size(); ++i)
    pairs.emplace_back(labels[i], labels[i + 1]);
  return Factor(std::move(labels), std::move(pairs), std::move(weights));
}

Factor Factor::bernoulli(const Rat& p_one) { return chain({Rat(1) - p_one, p_one}); }

Factor Factor::antichain(std::vector<Rat> weights) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < weights.size(); ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Factor(std::move(labels), {}, std::move(weights));
}

Factor Factor::diamond(const Rat& w_bot, const Rat& w_m1, const Rat& w_m2, const Rat& w_top) {
  return Factor({"bot", "m1", "m2", "top"},
                {{"bot", "m1"}, {"bot", "m2"}, {"m1", "top"}, {"m2", "top"}},
                {w_bot, w_m1, w_m2, w_top});
}

ProductSpace::ProductSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("a product space needs at least one factor");
  const std::size_t n = factors_.size();
  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n) {
      const std::uint64_t below = strides_[i + 1] * factors_[i + 1].size();
      strides_[i] = below;
    }
  }
  unsigned __int128 count = 1;
  for (const auto& f : factors_) {
    count *= f.size();
    if (count > (static_cast<unsigned __int128>(1) << 62)) {
      too_large_ = true;
      break;
    }
  }
  outcome_count_ = too_large_ ? ~std::uint64_t{0} : static_cast<std::uint64_t>(count);
  if (!too_large_ && outcome_count_ <= (std::uint64_t{1} << 16)) {
    weight_cache_.resize(outcome_count_);
    for_each_outcome(*this, [&](std::uint64_t index, const Rat& weight) {
      weight_cache_[index] = weight;
    });
  }
}

void ProductSpace::require_enumerable() const {
  if (!enumerable())
    throw CapExceeded("space has more than 2^24 outcomes; exact enumeration refused");
}

ValidationReport ProductSpace::validate() const {
  ValidationReport report;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    auto sub = factors_[i].validate();
    for (auto& v : sub.violations)
      report.violations.push_back("factor " + std::to_string(i + 1) + ": " + v);
  }
  return report;
}

Outcome ProductSpace::outcome_of(std::uint64_t index) const {
  Outcome coords(arity());
  for (std::size_t i = 0; i < arity(); ++i) coords[i] = coord_of(index, i);
  return coords;
}

std::uint64_t ProductSpace::index_of(const Outcome& coords) const {
  if (coords.size() != arity())
    throw std::invalid_argument("outcome has " + std::to_string(coords.size()) +
                                " coordinates, space has " + std::to_string(arity()));
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (coords[i] < 0 || coords[i] >= static_cast<int>(factors_[i].size()))
      throw std::invalid_argument("coordinate " + std::to_string(i + 1) +
                                  " is out of range for its factor");
    index += static_cast<std::uint64_t>(coords[i]) * strides_[i];
  }
  return index;
}

bool ProductSpace::leq(const Outcome& a, const Outcome& b) const {
  if (a.size() != arity() || b.size() != arity())
    throw std::invalid_argument("dimension mismatch in product-order comparison");
  for (std::size_t i = 0; i < arity(); ++i)
    if (!factors_[i].leq(static_cast<std::size_t>(a[i]), static_cast<std::size_t>(b[i])))
      return false;
  return true;
}

bool ProductSpace::leq_index(std::uint64_t a, std::uint64_t b) const {
  for (std::size_t i = 0; i < arity(); ++i)
    if (!factors_[i].leq(static_cast<std::size_t>(coord_of(a, i)),
                         static_cast<std::size_t>(coord_of(b, i))))
      return false;
  return true;
}

Rat ProductSpace::outcome_weight(std::uint64_t index) const {
  if (!weight_cache_.empty()) return weight_cache_[index];
  Rat w = 1;
  for (std::size_t i = 0; i < arity(); ++i)
    w *= factors_[i].weight(static_cast<std::size_t>(coord_of(index, i)));
  return w;
}

Rat ProductSpace::measure(const boost::dynamic_bitset<>& outcomes) const {
  Rat total = 0;
  if (!weight_cache_.empty()) {
    for (auto index = outcomes.find_first(); index != boost::dynamic_bitset<>::npos;
         index = outcomes.find_next(index))
      total += weight_cache_[index];
    return total;
  }
  for_each_outcome(*this, [&](std::uint64_t index, const Rat& weight) {
    if (outcomes.test(index)) total += weight;
  });
  return total;
}

Rat ProductSpace::measure(std::span<const std::uint64_t> outcome_indices) const {
  Rat total = 0;
  for (std::uint64_t index : outcome_indices) total += outcome_weight(index);
  return total;
}

bool ProductSpace::all_factors_have_unique_minimum() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.has_unique_minimum(); });
}

bool ProductSpace::all_factors_have_unique_maximum() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.has_unique_maximum(); });
}

}  // namespace boxkit
