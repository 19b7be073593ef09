// Acceptance suite: every exit criterion as one timed pass/fail line.
// Usage: acceptance [golden-dir]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "boxkit/bounds.hpp"
#include "boxkit/disjoint.hpp"
#include "boxkit/formats.hpp"
#include "boxkit/gallery.hpp"
#include "boxkit/percolation.hpp"
#include "boxkit/verify.hpp"

using namespace boxkit;

namespace {

struct Harness {
  int failures = 0;
  int index = 0;

  void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

bool suite_ok(const verify::SuiteResult& result, std::string& detail, std::uint64_t min_instances) {
  std::ostringstream out;
  out << result.instances << " instances, " << result.violations << " violations";
  detail = out.str();
  if (!result.passed() && !result.first_counterexample.empty())
    detail += "\n" + result.first_counterexample;
  return result.passed() && result.instances >= min_instances;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string golden_dir = argc > 1 ? argv[1] : "tests/golden";
  Harness h;

  h.criterion("remark-ii reproduction: Pr(X>=1)=1, Pr(Y>=1)=3/4, domination fails",
              [](std::string& detail) {
                std::ostringstream sink;
                const bool gallery_ok = gallery::run("remark-ii", sink);
                const ProductSpace space({Factor::bernoulli(Rat(1, 2))});
                const std::vector<Event> events = {Event::explicit_outcomes(space, {{0}}),
                                                   Event::explicit_outcomes(space, {{1}})};
                const CountDistribution x = x_distribution(events);
                const CountDistribution y =
                    y_distribution({events[0].probability(), events[1].probability()});
                detail = "Pr(X>=1) = " + to_string(x.survival(1)) +
                         ", Pr(Y>=1) = " + to_string(y.survival(1));
                return gallery_ok && x.survival(1) == Rat(1) && y.survival(1) == Rat(3, 4) &&
                       !stochastically_dominates(x, y);
              });

  h.criterion("theorem 1 exhaustive: X dominated by Y on all Bernoulli corpora (n<=3, k<=3)",
              [](std::string& detail) {
                verify::Theorem1Options options;  // uniform + (1/3, 2/3), both directions
                return suite_ok(verify::theorem1_exhaustive(options), detail, 100000);
              });

  h.criterion("PA diamond variant: three PA weightings, n<=2, k<=2, zero violations",
              [](std::string& detail) {
                return suite_ok(verify::theorem1_pa_diamond(2, 2), detail, 1);
              });

  h.criterion("BK recovery (36 increasing pairs) and Reimer-induction (256 arbitrary pairs)",
              [](std::string& detail) {
                std::string d1, d2;
                // n <= 3 sweep includes the 36 increasing pairs on {0,1}^2.
                const bool bk = suite_ok(verify::bk_recovery(3), d1, 36);
                const bool reimer = suite_ok(verify::reimer_induction(2000, 20250810), d2, 256);
                detail = "bk: " + d1 + "; reimer: " + d2;
                return bk && reimer;
              });

  h.criterion("theorem 2 end-to-end: exact Pr(X >= lambda+t) <= exp[-lambda phi(t/lambda)]",
              [](std::string& detail) {
                return suite_ok(verify::chernoff_tail_random(10000, 20250810), detail, 10000);
              });

  h.criterion("lemma JUB end-to-end: exact Pr(Z >= lambda+t) <= exp[-lambda phi(t/lambda)]",
              [](std::string& detail) {
                return suite_ok(verify::jub_tail_random(10000, 20250810), detail, 10000);
              });

  h.criterion("bound chain product <= chernoff <= bernstein and the quadrature identity",
              [](std::string& detail) {
                return suite_ok(verify::bounds_grid(), detail, 2000);
              });

  h.criterion("psi = 0 exactness: increasing families with psi = 0 have X law = Y law",
              [](std::string& detail) {
                std::uint64_t checked = 0, violations = 0;
                const std::vector<Rat> ps = {Rat(1, 2), Rat(2, 3)};
                auto advance = [&ps](std::vector<std::size_t>& pick) {
                  for (std::size_t j = pick.size(); j-- > 0;) {
                    if (++pick[j] < ps.size()) return true;
                    pick[j] = 0;
                  }
                  return false;
                };
                for (unsigned n = 1; n <= 3; ++n) {
                  std::vector<std::size_t> pick(n, 0);
                  do {
                    std::vector<Factor> factors;
                    for (std::size_t i = 0; i < n; ++i)
                      factors.push_back(Factor::bernoulli(ps[pick[i]]));
                    const ProductSpace space(std::move(factors));
                    const auto upsets = enumerate_upset_bitsets(space);
                    std::vector<Event> pool;
                    for (const auto& bits : upsets) pool.push_back(Event::from_bits(space, bits));
                    // All ordered pairs with psi = 0.
                    for (std::size_t a = 0; a < pool.size(); ++a)
                      for (std::size_t b = 0; b < pool.size(); ++b) {
                        const std::vector<Event> pair = {pool[a], pool[b]};
                        if (psi(pair) != 0) continue;
                        ++checked;
                        if (!(x_distribution(pair) ==
                              y_distribution({pair[0].probability(), pair[1].probability()})))
                          ++violations;
                      }
                  } while (advance(pick));
                }
                std::ostringstream out;
                out << checked << " psi-zero families, " << violations << " violations";
                detail = out.str();
                return checked > 0 && violations == 0;
              });

  h.criterion("Harris: independent increasing events occur disjointly, mu(box)=mu(cap)",
              [](std::string& detail) {
                return suite_ok(verify::harris_disjointness(3), detail, 1);
              });

  h.criterion("theorem 2 example (n = 4, 5): max X = 1, independent family, Pr(Z=n-1) > 0",
              [](std::string& detail) {
                std::ostringstream out;
                bool ok = true;
                for (unsigned n : {4u, 5u}) {
                  const ProductSpace space(std::vector<Factor>(n, Factor::bernoulli(Rat(1, 2))));
                  std::vector<Event> events;
                  for (unsigned i = 0; i + 1 < n; ++i) {
                    boost::dynamic_bitset<> bits(space.outcome_count());
                    for (std::uint64_t w = 0; w < space.outcome_count(); ++w)
                      if (space.coord_of(w, i) != space.coord_of(w, n - 1)) bits.set(w);
                    events.push_back(Event::from_bits(space, std::move(bits)));
                  }
                  int max_x = 0;
                  for (std::uint64_t w = 0; w < space.outcome_count(); ++w)
                    max_x = std::max(max_x, x_at(events, w));
                  const bool independent = are_independent(events);
                  const Rat z_top = z_distribution(events).pmf(n - 1);
                  out << "n=" << n << ": max X=" << max_x << ", Pr(Z=" << n - 1
                      << ")=" << to_string(z_top) << "; ";
                  ok = ok && max_x == 1 && independent && z_top > 0 &&
                       z_top == Rat(1) / rational_pow(Rat(2), n - 1);
                }
                detail = out.str();
                return ok;
              });

  h.criterion("oracle equivalence: x_at vs all-subsets brute force, and graph vs space search",
              [](std::string& detail) {
                std::string d1, d2;
                const bool oracle = suite_ok(verify::x_oracle_random(1000, 20250810), d1, 1000);
                const bool graph = suite_ok(verify::percolation_specialization(), d2, 4096);
                detail = "oracle: " + d1 + "; specialization: " + d2;
                return oracle && graph;
              });

  h.criterion("percolation Monte Carlo: 3x3 grid, p=0.7, 1e5 samples, seed 42",
              [&golden_dir](std::string& detail) {
                const Graph grid = Graph::grid(3, 3);
                const TerminalPairs pairs{{{0, 8}, {2, 6}}};
                const auto report = monte_carlo_tail(grid, pairs, Rat(7, 10), 100000, 42, 4);
                const auto rerun = monte_carlo_tail(grid, pairs, Rat(7, 10), 100000, 42, 1);
                const std::string csv = report.to_csv();
                if (csv != rerun.to_csv()) {
                  detail = "CSV not byte-stable across reruns";
                  return false;
                }
                const std::string golden = read_file(golden_dir + "/percolation_3x3_seed42.csv");
                if (golden.empty()) {
                  detail = "golden file missing under " + golden_dir;
                  return false;
                }
                if (csv != golden) {
                  detail = "CSV differs from the frozen golden file";
                  return false;
                }
                if (!report.lambda_exact) {
                  detail = "lambda was not computed exactly";
                  return false;
                }
                // Exact lambda from the 2^12 enumeration, checked directly.
                const Rat lambda = exact_pair_probability(grid, Rat(7, 10), {0, 8}) +
                                   exact_pair_probability(grid, Rat(7, 10), {2, 6});
                if (to_double(lambda) != report.lambda) {
                  detail = "reported lambda differs from the direct enumeration";
                  return false;
                }
                std::ostringstream out;
                out << "lambda = " << format_double(report.lambda);
                for (const auto& row : report.rows) {
                  if (!row.chernoff_bound) continue;  // rows at or below lambda
                  const double lhs = row.empirical_survival - 3.0 * row.std_err;
                  out << "; r=" << row.r << ": " << format_double(lhs)
                      << " <= " << format_double(*row.chernoff_bound);
                  if (lhs > *row.chernoff_bound) {
                    detail = out.str() + " VIOLATED";
                    return false;
                  }
                }
                detail = out.str();
                return true;
              });

  std::printf("%d/%d criteria passed\n", h.index - h.failures, h.index);
  return h.failures == 0 ? 0 : 1;
}
