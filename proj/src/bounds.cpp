#include "boxkit/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "boxkit/disjoint.hpp"

namespace boxkit {

namespace {

// Advances an r-subset of {0..k-1} to its lexicographic successor.
bool next_combination(std::vector<std::size_t>& subset, unsigned k) {
  const std::size_t r = subset.size();
  for (std::size_t j = r; j-- > 0;) {
    if (subset[j] + (r - j) < k) {
      ++subset[j];
      for (std::size_t l = j + 1; l < r; ++l) subset[l] = subset[l - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

double phi(double x) {
  if (x < -1.0) throw std::domain_error("phi is defined on [-1, inf)");
  if (x == -1.0) return 1.0;
  if (x == 0.0) return 0.0;
  return (1.0 + x) * std::log1p(x) - x;
}

double bk_chernoff(double lambda, double t) {
  if (lambda < 0 || t < 0) throw std::domain_error("bk_chernoff needs lambda, t >= 0");
  if (t == 0) return 1.0;
  if (lambda == 0) return 0.0;
  return std::exp(-lambda * phi(t / lambda));
}

double bernstein(double lambda, double t) {
  if (lambda < 0 || t < 0) throw std::domain_error("bernstein needs lambda, t >= 0");
  if (t == 0) return 1.0;
  return std::exp(-t * t / (2.0 * (lambda + t / 3.0)));
}

double janson_bound(double lambda, double t) { return bk_chernoff(lambda, t); }

double falling_factorial(double x, unsigned r) {
  double p = 1.0;
  for (unsigned i = 0; i < r; ++i) p *= x - i;
  return p;
}

double product_bound(double lambda, unsigned t) {
  if (lambda <= 0) throw std::domain_error("product_bound needs lambda > 0");
  if (t == 0) throw std::domain_error("product_bound needs integer t >= 1");
  double p = 1.0;
  for (unsigned i = 0; i < t; ++i) p *= lambda / (lambda + t - i);
  return p;
}

TailBoundReport tail_report(double lambda, double t, std::optional<Rat> exact_tail) {
  TailBoundReport report;
  report.lambda = lambda;
  report.t = t;
  report.chernoff = bk_chernoff(lambda, t);
  report.bernstein = bernstein(lambda, t);
  if (lambda > 0 && t >= 1 && t == std::floor(t))
    report.product = product_bound(lambda, static_cast<unsigned>(t));
  report.exact_tail = std::move(exact_tail);
  return report;
}

MarkovReport markov_chain_verify(std::span<const Event> events, unsigned r, unsigned threads) {
  require_same_space(events);
  if (events.empty()) throw std::invalid_argument("markov_chain_verify needs at least one event");
  const ProductSpace& space = events.front().space();
  for (std::size_t i = 0; i < space.arity(); ++i)
    if (!space.factor(i).is_linear())
      throw std::domain_error("factor " + std::to_string(i + 1) +
                              " is not linearly ordered; the box product bound needs linear orders");
  const auto k = static_cast<unsigned>(events.size());
  if (r == 0 || r > k) throw std::domain_error("markov_chain_verify needs 1 <= r <= k");

  MarkovReport report;
  report.r = r;
  for (const Event& e : events) report.lambda += e.probability();

  // E chi = r! * sum over |I| = r of mu(box_I), by enumerating r-subsets.
  Rat sum_box = 0;
  std::vector<std::size_t> subset(r);
  for (std::size_t i = 0; i < r; ++i) subset[i] = i;
  do {
    sum_box += box_event(events, subset).probability();
  } while (next_combination(subset, k));
  Rat r_factorial = 1;
  for (unsigned i = 2; i <= r; ++i) r_factorial *= i;
  report.chi_mean = r_factorial * sum_box;
  report.lambda_pow_r = rational_pow(report.lambda, r);
  report.chi_bound_holds = report.chi_mean <= report.lambda_pow_r;

  const CountDistribution law = x_distribution(events, threads);
  report.exact_tail = law.survival_at(report.lambda + r);
  report.markov_bound = rational_pow(report.lambda, r) / boxkit::falling_factorial(report.lambda + r, r);
  report.tail_bound_holds = report.exact_tail <= report.markov_bound;
  return report;
}

BestMarkovBound best_markov_tail_bound(const Rat& lambda, unsigned t, unsigned k) {
  if (t == 0 || k == 0) throw std::domain_error("best_markov_tail_bound needs t >= 1 and k >= 1");
  BestMarkovBound best;
  best.truncated = t > k;
  const unsigned top = std::min(t, k);
  for (unsigned r = 1; r <= top; ++r) {
    const Rat denom = boxkit::falling_factorial(lambda + t, r);
    if (denom <= 0) continue;
    Rat bound = rational_pow(lambda, r) / denom;
    if (best.r == 0 || bound < best.bound) {
      best.bound = bound;
      best.r = r;
    }
  }
  if (best.r == 0) {
    best.bound = 1;
    best.r = 1;
  }
  return best;
}

}  // namespace boxkit
