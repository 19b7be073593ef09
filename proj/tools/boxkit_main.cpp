#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "boxkit/bounds.hpp"
#include "boxkit/disjoint.hpp"
#include "boxkit/formats.hpp"
#include "boxkit/gallery.hpp"
#include "boxkit/percolation.hpp"
#include "boxkit/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw boxkit::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

struct DistArgs {
  std::string space_file;
  std::string events_file;
  std::string out_prefix;
  unsigned threads = 0;
};

int run_dist(const DistArgs& args) {
  using namespace boxkit;
  const ProductSpace space = parse_space_json(read_file(args.space_file));
  const auto report = space.validate();
  if (!report.ok()) {
    std::cerr << "invalid space:\n" << report.to_string();
    return kExitUsage;
  }
  const std::vector<Event> events = parse_events_json(read_file(args.events_file), space);
  const unsigned threads = args.threads ? args.threads : std::thread::hardware_concurrency();

  const CountDistribution x = x_distribution(events, threads);
  std::vector<Rat> probs;
  for (const Event& e : events) probs.push_back(e.probability());
  const CountDistribution y = y_distribution(probs);
  const CountDistribution z = z_distribution(events, threads);

  if (args.out_prefix.empty()) {
    std::cout << "# X distribution\n" << distribution_to_csv(x);
    std::cout << "# Y distribution\n" << distribution_to_csv(y);
    std::cout << "# Z distribution\n" << distribution_to_csv(z);
  } else {
    write_output(args.out_prefix + "_X.csv", distribution_to_csv(x));
    write_output(args.out_prefix + "_Y.csv", distribution_to_csv(y));
    write_output(args.out_prefix + "_Z.csv", distribution_to_csv(z));
  }

  bool all_increasing = !events.empty();
  bool all_decreasing = !events.empty();
  for (const Event& e : events) {
    all_increasing = all_increasing && e.is_increasing();
    all_decreasing = all_decreasing && e.is_decreasing();
  }
  bool factors_pa = true;
  bool pa_verified = true;
  for (std::size_t i = 0; i < space.arity(); ++i) {
    if (space.factor(i).size() > boxkit::kPaFactorCap) {
      pa_verified = false;
      continue;
    }
    factors_pa = factors_pa && space.factor(i).is_positively_associated();
  }
  const bool dominated = stochastically_dominates(x, y);
  std::cout << "domination X <= Y: " << (dominated ? "true" : "false") << '\n';
  std::cout << "hypotheses: events " << (events.empty() ? "none"
                                        : all_increasing ? "all increasing"
                                        : all_decreasing ? "all decreasing"
                                                         : "not all increasing, not all decreasing")
            << "; factors "
            << (!pa_verified        ? "PA not verified (factor too large)"
                : factors_pa        ? "all positively associated"
                                    : "not all positively associated")
            << '\n';
  return kExitOk;
}

int run_verify(const boxkit::verify::VerifyBudgets& budgets) {
  const auto results = boxkit::verify::run_suites(budgets);
  bool failed = false;
  std::uint64_t total = 0;
  for (const auto& suite : results) {
    total += suite.instances;
    std::cout << (suite.passed() ? "[pass] " : "[FAIL] ") << suite.name << ": "
              << suite.instances << " instances, " << suite.violations << " violations\n";
    if (!suite.passed()) {
      failed = true;
      std::cout << "counterexample:\n" << suite.first_counterexample << '\n';
    }
  }
  std::cout << (failed ? "FAIL" : "PASS") << " (" << results.size() << " suites, " << total
            << " instances)\n";
  return failed ? kExitVerificationFailure : kExitOk;
}

int run_gallery(const std::string& name) {
  bool ok;
  if (name == "all") {
    ok = true;
    for (const auto& each : boxkit::gallery::case_names())
      ok = boxkit::gallery::run(each, std::cout) && ok;
  } else {
    ok = boxkit::gallery::run(name, std::cout);
  }
  std::cout << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kExitOk : kExitVerificationFailure;
}

struct BoundsArgs {
  double lambda = 0;
  double t = 0;
  std::string exact_tail;
  std::string out;
};

int run_bounds(const BoundsArgs& args) {
  std::optional<boxkit::Rat> exact;
  if (!args.exact_tail.empty()) exact = boxkit::parse_rational(args.exact_tail);
  const auto report = boxkit::tail_report(args.lambda, args.t, exact);
  std::ostringstream out;
  out << "lambda,t,product,chernoff,bernstein";
  if (report.exact_tail) out << ",exact_tail";
  out << '\n' << boxkit::format_double(report.lambda) << ',' << boxkit::format_double(report.t)
      << ',';
  if (report.product) out << boxkit::format_double(*report.product);
  out << ',' << boxkit::format_double(report.chernoff) << ','
      << boxkit::format_double(report.bernstein);
  if (report.exact_tail) out << ',' << boxkit::format_double(boxkit::to_double(*report.exact_tail));
  out << '\n';
  write_output(args.out, out.str());
  return kExitOk;
}

struct PercolationArgs {
  std::string graph = "grid3x3";
  std::string pairs = "1-9,3-7";
  std::string p = "0.7";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 0;
};

boxkit::TerminalPairs parse_pairs(const std::string& text) {
  boxkit::TerminalPairs pairs;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto dash = token.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("pair '" + token + "' is not of the form x-y");
    pairs.pairs.emplace_back(std::stoi(token.substr(0, dash)) - 1,
                             std::stoi(token.substr(dash + 1)) - 1);
  }
  if (pairs.pairs.empty()) throw std::invalid_argument("no terminal pairs given");
  return pairs;
}

int run_percolation(const PercolationArgs& args) {
  using namespace boxkit;
  Graph graph = args.graph.rfind("file:", 0) == 0 ? Graph::parse(read_file(args.graph.substr(5)))
                                                  : Graph::named(args.graph);
  graph.validate();
  const TerminalPairs pairs = parse_pairs(args.pairs);
  pairs.validate(graph);
  const Rat p = parse_rational(args.p);
  const unsigned threads = args.threads ? args.threads : std::thread::hardware_concurrency();
  const MonteCarloReport report =
      monte_carlo_tail(graph, pairs, p, args.samples, args.seed, threads);
  write_output(args.out, report.to_csv());
  if (!args.out.empty())
    std::cout << "wrote " << report.rows.size() << " rows to " << args.out << " (lambda = "
              << format_double(report.lambda) << (report.lambda_exact ? ", exact" : ", estimated")
              << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact disjoint-occurrence toolkit: distributions, tail bounds, verification"};
  app.require_subcommand(1);

  DistArgs dist_args;
  auto* dist = app.add_subcommand("dist", "Exact X, Y, Z distributions and the domination verdict");
  dist->add_option("--space", dist_args.space_file, "Space file (JSON)")->required();
  dist->add_option("--events", dist_args.events_file, "Events file (JSON)")->required();
  dist->add_option("--out", dist_args.out_prefix, "Output prefix for <prefix>_{X,Y,Z}.csv");
  dist->add_option("--threads", dist_args.threads, "Worker threads (default: all cores)");

  boxkit::verify::VerifyBudgets budgets;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive and randomized theorem corpora");
  verify->add_option("--max-coords", budgets.max_coords, "Max coordinates (default 3)");
  verify->add_option("--max-factor-size", budgets.max_factor_size,
                     "Max factor size for random chains (default 3)");
  verify->add_option("--families", budgets.max_family, "Max family size (default 3)");
  verify->add_option("--random-instances", budgets.random_instances,
                     "Random instances per randomized suite (default 10000)");
  verify->add_option("--seed", budgets.seed, "Seed for randomized corpora")->required();
  verify->add_flag("--include-non-pa", budgets.include_non_pa_factor,
                   "Mutation check: include a non-PA antichain factor (expect violations)");

  std::string gallery_name;
  auto* gallery = app.add_subcommand("gallery", "Reproduce a named example instance");
  gallery->add_option("name", gallery_name, "remark-ii | remark-iv | theorem2-example | harris | bk-recovery | all")
      ->required();

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the tail-bound formulas");
  bounds->add_option("--lambda", bounds_args.lambda, "Mean parameter lambda >= 0")->required();
  bounds->add_option("--t", bounds_args.t, "Deviation t >= 0")->required();
  bounds->add_option("--exact-tail", bounds_args.exact_tail, "Optional exact tail (rational)");
  bounds->add_option("--out", bounds_args.out, "Output CSV path (default stdout)");

  PercolationArgs perc_args;
  auto* perc = app.add_subcommand("percolation", "Monte Carlo disjoint-connection tails");
  perc->add_option("--graph", perc_args.graph, "grid3x3|grid2x2|cycle6|cycle8|complete5|file:<path>");
  perc->add_option("--pairs", perc_args.pairs, "Terminal pairs, e.g. \"1-9,3-7\" (1-based)");
  perc->add_option("--p", perc_args.p, "Edge probability (rational or decimal string)");
  perc->add_option("--samples", perc_args.samples, "Sample count");
  perc->add_option("--seed", perc_args.seed, "RNG seed")->required();
  perc->add_option("--out", perc_args.out, "Output CSV path (default stdout)");
  perc->add_option("--threads", perc_args.threads, "Worker threads (default: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dist->parsed()) return run_dist(dist_args);
    if (verify->parsed()) return run_verify(budgets);
    if (gallery->parsed()) return run_gallery(gallery_name);
    if (bounds->parsed()) return run_bounds(bounds_args);
    if (perc->parsed()) return run_percolation(perc_args);
  } catch (const boxkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const boxkit::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
