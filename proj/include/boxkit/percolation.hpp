#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/event.hpp"
#include "boxkit/rational.hpp"
#include "boxkit/space.hpp"

namespace boxkit {

// A fixed finite host graph. Vertices are 0-based internally; files and the
// CLI use 1-based labels. Edge indices are dense and follow the edge list.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::size_t edge_count() const { return edges.size(); }
  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  void validate() const;

  // Row-major w x h grid: right edges then down edges per vertex.
  static Graph grid(int width, int height);
  static Graph cycle(int n);
  static Graph complete(int n);
  // "grid3x3", "cycle8", "complete5", or "file:<path>".
  static Graph named(const std::string& name);
  static Graph parse(const std::string& text);  // file format
};

// Terminal pairs (x_i, y_i); all 2k vertices must be distinct.
struct TerminalPairs {
  std::vector<std::pair<int, int>> pairs;
  void validate(const Graph& graph) const;
};

// Open-edge bitmask; bit e is edge e.
using EdgeConfiguration = std::uint64_t;

// SplitMix64. Per-sample substreams hash (seed, sample index) into the
// initial state, so sample j's stream never depends on how samples are
// spread over workers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index);
  std::uint64_t next();
  double next_unit();  // [0, 1), 53-bit

 private:
  std::uint64_t state_;
};

// Each edge open independently with probability p, drawn in edge order from
// the (seed, sample_index) substream.
EdgeConfiguration sample_configuration(const Graph& graph, double p, std::uint64_t seed,
                                       std::uint64_t sample_index);

bool path_exists(const Graph& graph, EdgeConfiguration config, int x, int y);

// Maximum number of pairs that are simultaneously connectable by pairwise
// edge-disjoint open paths. Exact backtracking over open simple paths.
// Caps: k <= 6 pairs, <= 32 open edges, <= 64 vertices.
int max_disjoint_connected_pairs(const Graph& graph, EdgeConfiguration config,
                                 const TerminalPairs& pairs);

// Exact connection probability by enumerating all 2^|E| configurations.
// Throws CapExceeded above 20 edges.
Rat exact_pair_probability(const Graph& graph, const Rat& p, std::pair<int, int> pair);

struct MonteCarloRow {
  int r = 0;
  double empirical_survival = 0;
  double std_err = 0;
  std::optional<double> chernoff_bound;  // at t = r - lambda, for r > lambda
};

struct MonteCarloReport {
  Rat p;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double lambda = 0;
  bool lambda_exact = false;  // exact enumeration vs Monte Carlo estimate
  std::vector<MonteCarloRow> rows;  // r = 0..k

  std::string to_csv() const;  // r,empirical_survival,std_err,lambda,t,chernoff_bound
};

MonteCarloReport monte_carlo_tail(const Graph& graph, const TerminalPairs& pairs, const Rat& p,
                                  std::uint64_t samples, std::uint64_t seed, unsigned threads = 1);

// Bridges to the exact engine: the percolation instance as a product space
// of Bernoulli(p) edge factors, and the connectivity events on it. Outcome
// rank maps to the configuration whose bit e is open iff the edge-e
// coordinate is 1.
ProductSpace build_edge_space(const Graph& graph, const Rat& p);
Event path_event(const ProductSpace& space, const Graph& graph, std::pair<int, int> pair);
EdgeConfiguration outcome_to_configuration(const ProductSpace& space, std::uint64_t outcome_index);

}  // namespace boxkit
