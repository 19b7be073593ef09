#pragma once

#include <optional>
#include <span>
#include <vector>

#include "boxkit/event.hpp"
#include "boxkit/rational.hpp"

namespace boxkit {

// The Cramér rate function (1+x)log(1+x) - x for x > -1, with the
// continuity convention phi(-1) = 1. Throws std::domain_error below -1.
double phi(double x);

// exp[-lambda * phi(t/lambda)]: the Poisson-type upper-tail bound.
// Conventions: 1 at t = 0; 0 when lambda = 0 < t (limit value).
double bk_chernoff(double lambda, double t);

// The Bernstein-style relaxation exp[-t^2 / (2(lambda + t/3))]; 1 at t = 0.
double bernstein(double lambda, double t);

// Same formula as bk_chernoff; named separately so reports can say which
// theorem they invoke.
double janson_bound(double lambda, double t);

// (x)(x-1)...(x-r+1); 1 for r = 0.
double falling_factorial(double x, unsigned r);

// lambda^t / (lambda+t)_t, the Markov step's bound at r = t.
double product_bound(double lambda, unsigned t);

struct TailBoundReport {
  double lambda = 0;
  double t = 0;
  double chernoff = 1;
  double bernstein = 1;
  std::optional<double> product;     // integer t >= 1 and lambda > 0 only
  std::optional<Rat> exact_tail;
};

TailBoundReport tail_report(double lambda, double t, std::optional<Rat> exact_tail = std::nullopt);

// One exact check of the counting argument behind the product bound:
// E chi = r! * sum_{|I|=r} mu(box_I) <= lambda^r, and for t = r,
// Pr(X >= lambda+t) <= lambda^r / (lambda+t)_r. Everything is exact
// rational; nothing rounds.
struct MarkovReport {
  unsigned r = 0;
  Rat lambda;
  Rat chi_mean;          // r! * sum over |I| = r of mu(box_I)
  Rat lambda_pow_r;
  bool chi_bound_holds = false;
  Rat exact_tail;        // Pr(X >= lambda + r)
  Rat markov_bound;      // lambda^r / (lambda+r)_r
  bool tail_bound_holds = false;
};

// Throws std::domain_error when some factor is not linearly ordered (the
// Reimer-induction hypothesis) or r is 0 or exceeds the family size.
MarkovReport markov_chain_verify(std::span<const Event> events, unsigned r, unsigned threads = 1);

// min over r in [1, min(t, k)] of lambda^r / (lambda+t)_r, with a flag when
// t exceeds the family size (the minimizing choice r = t is unavailable).
struct BestMarkovBound {
  Rat bound;
  unsigned r = 0;
  bool truncated = false;  // true iff t > k
};
BestMarkovBound best_markov_tail_bound(const Rat& lambda, unsigned t, unsigned k);

}  // namespace boxkit
