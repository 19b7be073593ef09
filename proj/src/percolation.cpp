#include "boxkit/percolation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "boxkit/bounds.hpp"
#include "boxkit/parallel.hpp"

namespace boxkit {

void Graph::validate() const {
  if (vertex_count <= 0) throw std::invalid_argument("graph needs at least one vertex");
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u + 1));
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
  }
}

Graph Graph::grid(int width, int height) {
  Graph g;
  g.vertex_count = width * height;
  auto id = [width](int r, int c) { return r * width + c; };
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) {
      if (c + 1 < width) g.edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < height) g.edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph Graph::cycle(int n) {
  Graph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

Graph Graph::complete(int n) {
  Graph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph Graph::named(const std::string& name) {
  if (name == "grid3x3") return grid(3, 3);
  if (name == "grid2x2") return grid(2, 2);
  if (name == "cycle8") return cycle(8);
  if (name == "cycle6") return cycle(6);
  if (name == "complete5") return complete(5);
  throw std::invalid_argument("unknown graph name '" + name + "'");
}

Graph Graph::parse(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  if (!(in >> g.vertex_count)) throw std::invalid_argument("graph file: missing vertex count");
  int u, v;
  while (in >> u >> v) g.edges.emplace_back(u - 1, v - 1);
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string tail;
    std::getline(in, tail);
    throw std::invalid_argument("graph file: malformed edge line near '" + tail + "'");
  }
  g.validate();
  return g;
}

void TerminalPairs::validate(const Graph& graph) const {
  std::vector<int> seen;
  for (const auto& [x, y] : pairs) {
    for (int v : {x, y}) {
      if (v < 0 || v >= graph.vertex_count)
        throw std::invalid_argument("terminal vertex " + std::to_string(v + 1) + " out of range");
      if (std::find(seen.begin(), seen.end(), v) != seen.end())
        throw std::invalid_argument("terminal vertices must be distinct; vertex " +
                                    std::to_string(v + 1) + " repeats");
      seen.push_back(v);
    }
  }
}

namespace {

inline std::uint64_t splitmix_scramble(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t index) {
  // Stream-splitting rule: hash seed and index separately, xor the results.
  return SplitMix64(splitmix_scramble(seed + 0x9e3779b97f4a7c15ull) ^
                    splitmix_scramble(index * 0xbf58476d1ce4e5b9ull + 0x2545f4914f6cdd1dull));
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  return splitmix_scramble(state_);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

EdgeConfiguration sample_configuration(const Graph& graph, double p, std::uint64_t seed,
                                       std::uint64_t sample_index) {
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability outside [0, 1]");
  if (graph.edge_count() > 64) throw CapExceeded("sampling supports at most 64 edges");
  SplitMix64 rng = SplitMix64::substream(seed, sample_index);
  EdgeConfiguration config = 0;
  for (std::size_t e = 0; e < graph.edge_count(); ++e)
    if (rng.next_unit() < p) config |= EdgeConfiguration{1} << e;
  return config;
}

bool path_exists(const Graph& graph, EdgeConfiguration config, int x, int y) {
  if (x == y) return true;
  std::vector<int> parent(graph.vertex_count);
  for (int v = 0; v < graph.vertex_count; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!(config & (EdgeConfiguration{1} << e))) continue;
    const int a = find(graph.edges[e].first), b = find(graph.edges[e].second);
    if (a != b) parent[a] = b;
  }
  return find(x) == find(y);
}

namespace {

struct PathPackSearch {
  const Graph* graph;
  std::vector<std::vector<std::pair<int, std::size_t>>> adjacency;  // (neighbor, edge)
  EdgeConfiguration open;
  const std::vector<std::pair<int, int>>* pairs;
  int best = 0;

  // Enumerates open simple paths for pair `pos` that avoid used edges,
  // recursing into the next pair for each one. Include-first, so large
  // systems are found early and the remaining-count prune bites.
  void route(std::size_t pos, int vertex, int target, std::uint64_t visited,
             EdgeConfiguration used) {
    if (vertex == target) {
      pack(pos + 1, used);
      return;
    }
    for (const auto& [next, e] : adjacency[static_cast<std::size_t>(vertex)]) {
      const EdgeConfiguration bit = EdgeConfiguration{1} << e;
      if (!(open & bit) || (used & bit)) continue;
      if (visited & (std::uint64_t{1} << next)) continue;
      route(pos, next, target, visited | (std::uint64_t{1} << next), used | bit);
    }
  }

  void pack(std::size_t pos, EdgeConfiguration used) {
    const int connected = static_cast<int>(pos) - skipped;
    best = std::max(best, connected);
    if (pos == pairs->size()) return;
    if (connected + static_cast<int>(pairs->size() - pos) <= best) return;
    const auto [x, y] = (*pairs)[pos];
    route(pos, x, y, std::uint64_t{1} << x, used);
    ++skipped;
    pack(pos + 1, used);
    --skipped;
  }

  int skipped = 0;
};

}  // namespace

int max_disjoint_connected_pairs(const Graph& graph, EdgeConfiguration config,
                                 const TerminalPairs& pairs) {
  if (pairs.pairs.size() > 6)
    throw CapExceeded("exact disjoint-path search supports at most 6 pairs");
  if (graph.vertex_count > 64)
    throw CapExceeded("exact disjoint-path search supports at most 64 vertices");
  const auto open_edges = static_cast<std::size_t>(std::popcount(config));
  if (open_edges > 32) throw CapExceeded("exact disjoint-path search supports at most 32 open edges");

  PathPackSearch search;
  search.graph = &graph;
  search.adjacency.resize(static_cast<std::size_t>(graph.vertex_count));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto& [u, v] = graph.edges[e];
    search.adjacency[static_cast<std::size_t>(u)].emplace_back(v, e);
    search.adjacency[static_cast<std::size_t>(v)].emplace_back(u, e);
  }
  search.open = config;
  search.pairs = &pairs.pairs;
  search.pack(0, 0);
  return search.best;
}

Rat exact_pair_probability(const Graph& graph, const Rat& p, std::pair<int, int> pair) {
  const std::size_t m = graph.edge_count();
  if (m > 20) throw CapExceeded("exact connection probability supports at most 20 edges");
  std::vector<Rat> open_pow(m + 1), closed_pow(m + 1);
  open_pow[0] = closed_pow[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    open_pow[i] = open_pow[i - 1] * p;
    closed_pow[i] = closed_pow[i - 1] * (Rat(1) - p);
  }
  Rat total = 0;
  const EdgeConfiguration end = EdgeConfiguration{1} << m;
  for (EdgeConfiguration config = 0; config < end; ++config) {
    if (!path_exists(graph, config, pair.first, pair.second)) continue;
    const auto ones = static_cast<std::size_t>(std::popcount(config));
    total += open_pow[ones] * closed_pow[m - ones];
  }
  return total;
}

std::string MonteCarloReport::to_csv() const {
  std::ostringstream out;
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::string(buf);
  };
  out << "r,empirical_survival,std_err,lambda,t,chernoff_bound\n";
  for (const auto& row : rows) {
    out << row.r << ',' << fmt(row.empirical_survival) << ',' << fmt(row.std_err) << ','
        << fmt(lambda) << ',' << fmt(row.r - lambda) << ',';
    if (row.chernoff_bound) out << fmt(*row.chernoff_bound);
    out << '\n';
  }
  return out.str();
}

MonteCarloReport monte_carlo_tail(const Graph& graph, const TerminalPairs& pairs, const Rat& p,
                                  std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  graph.validate();
  pairs.validate(graph);
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability outside [0, 1]");
  const std::size_t k = pairs.pairs.size();
  const double p_double = to_double(p);

  struct Counts {
    std::vector<std::uint64_t> at_least;  // counts of X >= r, r = 0..k
    std::uint64_t connected_pair_sum = 0;
  };
  Counts init;
  init.at_least.assign(k + 1, 0);
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    Counts local;
    local.at_least.assign(k + 1, 0);
    for (std::uint64_t j = begin; j < end; ++j) {
      const EdgeConfiguration config = sample_configuration(graph, p_double, seed, j);
      const int x = max_disjoint_connected_pairs(graph, config, pairs);
      for (int r = 0; r <= x; ++r) ++local.at_least[static_cast<std::size_t>(r)];
      for (const auto& [a, b] : pairs.pairs)
        if (path_exists(graph, config, a, b)) ++local.connected_pair_sum;
    }
    return local;
  };
  auto merge = [](Counts a, Counts b) {
    for (std::size_t r = 0; r < a.at_least.size(); ++r) a.at_least[r] += b.at_least[r];
    a.connected_pair_sum += b.connected_pair_sum;
    return a;
  };
  Counts counts = parallel_reduce(samples, threads, std::move(init), chunk, merge);

  MonteCarloReport report;
  report.p = p;
  report.samples = samples;
  report.seed = seed;
  if (graph.edge_count() <= 20) {
    Rat lambda = 0;
    for (const auto& pair : pairs.pairs) lambda += exact_pair_probability(graph, p, pair);
    report.lambda = to_double(lambda);
    report.lambda_exact = true;
  } else {
    report.lambda = samples == 0
                        ? 0.0
                        : static_cast<double>(counts.connected_pair_sum) / static_cast<double>(samples);
    report.lambda_exact = false;
  }
  const auto n = static_cast<double>(samples);
  for (std::size_t r = 0; r <= k; ++r) {
    MonteCarloRow row;
    row.r = static_cast<int>(r);
    const double phat = samples == 0 ? 0.0 : static_cast<double>(counts.at_least[r]) / n;
    row.empirical_survival = phat;
    row.std_err = samples == 0 ? 0.0 : std::sqrt(phat * (1.0 - phat) / n);
    if (static_cast<double>(r) > report.lambda)
      row.chernoff_bound = bk_chernoff(report.lambda, static_cast<double>(r) - report.lambda);
    report.rows.push_back(row);
  }
  return report;
}

ProductSpace build_edge_space(const Graph& graph, const Rat& p) {
  std::vector<Factor> factors;
  factors.reserve(graph.edge_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) factors.push_back(Factor::bernoulli(p));
  return ProductSpace(std::move(factors));
}

EdgeConfiguration outcome_to_configuration(const ProductSpace& space, std::uint64_t outcome_index) {
  EdgeConfiguration config = 0;
  for (std::size_t e = 0; e < space.arity(); ++e)
    if (space.coord_of(outcome_index, e) == 1) config |= EdgeConfiguration{1} << e;
  return config;
}

Event path_event(const ProductSpace& space, const Graph& graph, std::pair<int, int> pair) {
  space.require_enumerable();
  if (space.arity() != graph.edge_count())
    throw std::invalid_argument("space arity does not match the graph's edge count");
  boost::dynamic_bitset<> bits(space.outcome_count());
  for (std::uint64_t w = 0; w < space.outcome_count(); ++w)
    if (path_exists(graph, outcome_to_configuration(space, w), pair.first, pair.second))
      bits.set(w);
  return Event::from_bits(space, std::move(bits));
}

}  // namespace boxkit
