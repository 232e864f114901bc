// strongdom: exact strong domination numbers, the edge operations that
// perturb them, and batch audits of the known bounds. Subcommands: solve,
// audit, fuzz, search, generate. Reports are JSON lines; all randomness is
// seeded and replayable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strongdom/audits.hpp"
#include "strongdom/families.hpp"
#include "strongdom/io.hpp"
#include "strongdom/parallel.hpp"
#include "strongdom/solver.hpp"
#include "strongdom/transforms.hpp"

namespace {

using namespace strongdom;

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  if (const char* env = std::getenv(name)) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) return value;
  }
  return fallback;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

// Inputs are either files (edge list or graph6, by --format or extension) or
// compact family specs like "P4", "C10", "K2,3", "corona(C3,K1)", "fig2-H".
Graph load_input(const std::string& input, const std::string& format,
                 std::string& label) {
  if (!file_exists(input)) {
    try {
      FamilySpec spec = FamilySpec::parse(input);
      label = spec.to_string();
      return generate(spec).graph;
    } catch (const ValidationError&) {
      throw ParseError("input '" + input +
                       "' is neither a readable file nor a family spec");
    }
  }
  label = input;
  std::string text = read_file(input);
  bool g6 = format == "g6" ||
            (format == "auto" && input.size() > 3 &&
             input.compare(input.size() - 3, 3, ".g6") == 0);
  return g6 ? parse_graph6(text) : parse_edge_list(text);
}

// Records go to --output when given, stdout otherwise.
class RecordSink {
 public:
  explicit RecordSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ValidationError("cannot open output file: " + path);
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
  }
  void write(const ReportRecord& record) {
    *out_ << emit_record_line(record) << '\n';
  }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

bool failed(const ReportRecord& r) {
  return !r.pass && r.status == "applicable";
}

double parse_probability(const std::string& text) {
  double p = 0.0;
  try {
    std::size_t used = 0;
    p = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    throw ValidationError("cannot parse probability '" + text + "'");
  }
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("probability must be in [0, 1]");
  return p;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveOpts {
  std::string input, format = "auto", mode = "strong", method = "auto";
  std::string output;
  std::uint64_t budget = 0;
  int oracle_cap = 0;
};

int run_solve(const SolveOpts& opt) {
  SolverConfig config;
  config.node_budget = opt.budget;
  config.oracle_vertex_cap = opt.oracle_cap;
  std::string label;
  Graph g = load_input(opt.input, opt.format, label);
  DominationMode mode = mode_from_string(opt.mode);

  SolveResult result;
  if (opt.method == "auto")
    result = solve_gamma(g, mode, config);
  else if (opt.method == "oracle")
    result = gamma_oracle(g, mode, config);
  else if (opt.method == "bnb")
    result = gamma_bnb(g, mode, config);
  else if (opt.method == "tree-dp")
    result = gamma_tree_dp(g, mode);
  else
    throw LookupError("unknown method: '" + opt.method + "'");

  RecordSink sink(opt.output);
  sink.write(to_record(result, label, mode));
  std::cerr << "gamma=" << result.gamma << " method=" << result.method
            << " nodes=" << result.stats.nodes
            << " elapsed_us=" << result.stats.elapsed_us << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

struct AuditOpts {
  std::string theorem, input, format = "auto", output;
  std::vector<int> edge;
  bool all_edges = false;
  int k = 0;
  std::string fixture;
  std::string g1, g2;
  std::string edge_class;
  std::vector<int> g1_edge, g2_edge;
  int copy_index = 0, g2_vertex = 0;
  std::uint64_t budget = 0;
  int oracle_cap = 0;
  unsigned threads = 1;
};

std::vector<Edge> audit_edges(const Graph& g, const AuditOpts& opt) {
  if (opt.all_edges) return g.edges();
  if (opt.edge.size() == 2) return {Edge{opt.edge[0], opt.edge[1]}};
  throw ValidationError("pass --edge u v or --all-edges");
}

std::vector<EdgeClass> corona_classes(const Graph& g1, const Graph& g2,
                                      const AuditOpts& opt) {
  if (opt.edge_class.empty()) {  // every resolvable class
    std::vector<EdgeClass> classes;
    for (const Edge& e : g1.edges())
      classes.push_back(EdgeClass::within_g1_edge(e));
    for (int i = 0; i < g1.vertex_count(); ++i)
      for (const Edge& e : g2.edges())
        classes.push_back(EdgeClass::within_copy_edge(i, e));
    for (int i = 0; i < g1.vertex_count(); ++i)
      for (int w = 0; w < g2.vertex_count(); ++w)
        classes.push_back(EdgeClass::cross_edge(i, w));
    return classes;
  }
  if (opt.edge_class == "within-g1") {
    if (opt.g1_edge.size() != 2)
      throw ValidationError("within-g1 needs --g1-edge u v");
    return {EdgeClass::within_g1_edge({opt.g1_edge[0], opt.g1_edge[1]})};
  }
  if (opt.edge_class == "within-copy") {
    if (opt.g2_edge.size() != 2)
      throw ValidationError("within-copy needs --g2-edge u v");
    return {EdgeClass::within_copy_edge(opt.copy_index,
                                        {opt.g2_edge[0], opt.g2_edge[1]})};
  }
  if (opt.edge_class == "cross")
    return {EdgeClass::cross_edge(opt.copy_index, opt.g2_vertex)};
  throw LookupError("unknown edge class: '" + opt.edge_class + "'");
}

int run_audit(const AuditOpts& opt) {
  static const std::set<std::string> known = {
      "edge-deletion",   "edge-subdivision",  "edge-contraction",
      "corollary",       "corona-deletion",   "corona-subdivision",
      "ksub",            "fixtures"};
  if (!known.count(opt.theorem))
    throw LookupError("unknown theorem: '" + opt.theorem + "'");

  SolverConfig config;
  config.node_budget = opt.budget;
  config.oracle_vertex_cap = opt.oracle_cap;
  RecordSink sink(opt.output);
  std::vector<ReportRecord> records;

  if (opt.theorem == "fixtures") {
    std::vector<std::string> ids =
        opt.fixture.empty() ? fixture_ids()
                            : std::vector<std::string>{opt.fixture};
    for (const auto& id : ids)
      records.push_back(to_record(audit_fixture_tightness(id, config)));
  } else if (opt.theorem == "ksub") {
    if (opt.k < 2) throw ValidationError("ksub audit needs --k >= 2");
    std::string label;
    Graph g = load_input(opt.input, opt.format, label);
    for (auto& r : to_records(audit_ksub(g, opt.k, config)))
      records.push_back(std::move(r));
  } else if (opt.theorem == "corona-deletion" ||
             opt.theorem == "corona-subdivision") {
    if (opt.g1.empty() || opt.g2.empty())
      throw ValidationError("corona audits need --g1 and --g2");
    std::string label1, label2;
    Graph g1 = load_input(opt.g1, "auto", label1);
    Graph g2 = load_input(opt.g2, "auto", label2);
    bool subdivision = opt.theorem == "corona-subdivision";
    auto classes = corona_classes(g1, g2, opt);
    records = parallel_map<ReportRecord>(
        classes.size(), opt.threads, [&](std::size_t i) {
          return to_record(subdivision
                               ? audit_corona_subdivision(g1, g2, classes[i],
                                                          config)
                               : audit_corona_deletion(g1, g2, classes[i],
                                                       config));
        });
  } else {
    std::string label;
    Graph g = load_input(opt.input, opt.format, label);
    auto edges = audit_edges(g, opt);
    records = parallel_map<ReportRecord>(
        edges.size(), opt.threads, [&](std::size_t i) {
          const Edge& e = edges[i];
          if (opt.theorem == "edge-deletion")
            return to_record(audit_edge_deletion(g, e, config));
          if (opt.theorem == "edge-subdivision")
            return to_record(audit_edge_subdivision(g, e, config));
          if (opt.theorem == "edge-contraction")
            return to_record(audit_edge_contraction(g, e, config));
          return to_record(audit_corollary(g, e, config));
        });
  }

  int failures = 0;
  for (const auto& r : records) {
    sink.write(r);
    if (failed(r)) ++failures;
  }
  std::cerr << records.size() << " audit record(s), " << failures
            << " failure(s)\n";
  return failures > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------------

struct FuzzOpts {
  int n_min = 0, n_max = 0, count = 0;
  std::string p_str = "0.5";
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::vector<std::string> theorems = {"all"};
  std::string output;
  std::uint64_t budget = 0;
  int oracle_cap = 0;
  unsigned threads = 1;
};

constexpr int kFuzzVertexCap = 16;

int run_fuzz(const FuzzOpts& opt) {
  if (!opt.seed_set) throw ValidationError("fuzz needs an explicit --seed");
  if (opt.n_min < 1 || opt.n_min > opt.n_max || opt.n_max > kFuzzVertexCap)
    throw ValidationError("need 1 <= n-min <= n-max <= " +
                          std::to_string(kFuzzVertexCap));
  if (opt.count < 0) throw ValidationError("count must be nonnegative");
  double p = parse_probability(opt.p_str);

  static const std::vector<std::string> all_theorems = {
      "edge-deletion", "edge-subdivision", "edge-contraction", "corollary"};
  std::vector<std::string> theorems;
  for (const auto& t : opt.theorems) {
    if (t == "all") {
      theorems = all_theorems;
      break;
    }
    if (std::find(all_theorems.begin(), all_theorems.end(), t) ==
        all_theorems.end())
      throw LookupError("unknown fuzz theorem: '" + t + "'");
    theorems.push_back(t);
  }

  SolverConfig config;
  config.node_budget = opt.budget;
  config.oracle_vertex_cap = opt.oracle_cap;
  RecordSink sink(opt.output);
  if (opt.count == 0) return 0;  // empty report

  ReportRecord header;
  header.theorem = "header";
  header.instance = "fuzz;p=" + opt.p_str;
  header.quantities = {
      {"seed", ReportValue(static_cast<long long>(opt.seed))},
      {"n_min", ReportValue(static_cast<long long>(opt.n_min))},
      {"n_max", ReportValue(static_cast<long long>(opt.n_max))},
      {"count", ReportValue(static_cast<long long>(opt.count))}};
  sink.write(header);

  // draw the whole instance plan up front so workers cannot perturb it
  SplitMix64 rng(opt.seed);
  std::vector<std::pair<int, std::uint64_t>> plan(opt.count);
  for (auto& [n, s] : plan) {
    n = opt.n_min + static_cast<int>(
                        rng.next_below(opt.n_max - opt.n_min + 1));
    s = rng.next();
  }

  auto per_instance = parallel_map<std::vector<ReportRecord>>(
      plan.size(), opt.threads, [&](std::size_t i) {
        auto [n, s] = plan[i];
        Graph g = random_graph(n, p, s);
        std::vector<ReportRecord> out;
        for (const auto& theorem : theorems) {
          for (const Edge& e : g.edges()) {
            if (theorem == "edge-deletion")
              out.push_back(to_record(audit_edge_deletion(g, e, config)));
            else if (theorem == "edge-subdivision")
              out.push_back(to_record(audit_edge_subdivision(g, e, config)));
            else if (theorem == "edge-contraction")
              out.push_back(to_record(audit_edge_contraction(g, e, config)));
            else
              out.push_back(to_record(audit_corollary(g, e, config)));
          }
        }
        return out;
      });

  struct Tally {
    long long pass = 0, fail = 0, not_applicable = 0, tight_lower = 0,
              tight_upper = 0;
  };
  std::map<std::string, Tally> tallies;
  int failures = 0;
  for (const auto& batch : per_instance) {
    for (const auto& r : batch) {
      sink.write(r);
      Tally& t = tallies[r.theorem];
      if (r.status != "applicable")
        ++t.not_applicable;
      else if (r.pass)
        ++t.pass;
      else {
        ++t.fail;
        ++failures;
      }
      if (r.tight_lower) ++t.tight_lower;
      if (r.tight_upper) ++t.tight_upper;
    }
  }
  for (const auto& [theorem, t] : tallies)
    std::cerr << theorem << ": pass=" << t.pass << " fail=" << t.fail
              << " not-applicable=" << t.not_applicable
              << " tight_lower=" << t.tight_lower
              << " tight_upper=" << t.tight_upper << '\n';
  return failures > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// search equal-del-sub
// ---------------------------------------------------------------------------

struct SearchOpts {
  int max_n = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int random_count = 200;
  std::string random_p = "0.5";
  std::string output;
  std::uint64_t budget = 0;
  unsigned threads = 1;
};

int run_search(const SearchOpts& opt) {
  if (!opt.seed_set) throw ValidationError("search needs an explicit --seed");
  if (opt.max_n < 1 || opt.max_n > 7)
    throw ValidationError("search supports --max-n between 1 and 7");
  double p = parse_probability(opt.random_p);

  SolverConfig config;
  config.node_budget = opt.budget;
  SearchPool pool;
  pool.exhaustive_max_n = std::min(opt.max_n, kEnumerationCap);
  if (opt.max_n >= 7) {
    pool.random_n = 7;
    pool.random_count = opt.random_count;
    pool.random_p = p;
    pool.seed = opt.seed;
  }

  RecordSink sink(opt.output);
  ReportRecord header;
  header.theorem = "header";
  header.instance = "search;equal-del-sub;p=" + opt.random_p;
  header.quantities = {
      {"max_n", ReportValue(static_cast<long long>(opt.max_n))},
      {"seed", ReportValue(static_cast<long long>(opt.seed))},
      {"random_count",
       ReportValue(static_cast<long long>(pool.random_count))}};
  sink.write(header);

  auto hits = search_equal_deletion_subdivision(pool, config, opt.threads);
  for (const auto& hit : hits) sink.write(to_record(hit));
  std::cerr << hits.size() << " equality pair(s) found\n";
  return 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateOpts {
  std::string family;
  std::vector<std::string> args;
  int k = 0;
  std::string format = "el";
  std::string output;
  std::string labels;
};

FamilySpec spec_from_generate(const GenerateOpts& opt) {
  auto int_arg = [&](std::size_t i) {
    if (i >= opt.args.size())
      throw ValidationError("family '" + opt.family + "' needs more arguments");
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(opt.args[i], &used);
      if (used != opt.args[i].size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw ValidationError("expected an integer argument, got '" +
                            opt.args[i] + "'");
    }
    return value;
  };
  if (opt.family == "path") return {Family::path, {int_arg(0)}};
  if (opt.family == "cycle") return {Family::cycle, {int_arg(0)}};
  if (opt.family == "complete") return {Family::complete, {int_arg(0)}};
  if (opt.family == "complete-bipartite")
    return {Family::complete_bipartite, {int_arg(0), int_arg(1)}};
  if (opt.family == "star") return {Family::star, {int_arg(0)}};
  if (opt.family == "corona") {
    if (opt.args.size() != 2)
      throw ValidationError("corona needs two component specs");
    FamilySpec spec;
    spec.family = Family::corona;
    spec.components = {FamilySpec::parse(opt.args[0]),
                       FamilySpec::parse(opt.args[1])};
    return spec;
  }
  if (opt.family == "fixture") {
    if (opt.args.size() != 1)
      throw ValidationError("fixture needs exactly one id");
    FamilySpec spec;
    spec.family = Family::fixture;
    spec.fixture_id = opt.args[0];
    return spec;
  }
  if (opt.family == "ksub") {
    if (opt.args.size() != 1)
      throw ValidationError("ksub needs one base graph spec");
    return FamilySpec::parse(opt.args[0]);
  }
  return FamilySpec::parse(opt.family);  // compact spec, e.g. "C10"
}

int run_generate(const GenerateOpts& opt) {
  if (opt.family == "ksub" && opt.k < 1)
    throw ValidationError("ksub needs --k >= 1");

  FamilySpec spec = spec_from_generate(opt);
  GeneratedGraph built = generate(spec);
  Graph g = built.graph;

  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  if (built.corona) {
    nlohmann::ordered_json corona;
    corona["n1"] = built.corona->n1;
    corona["n2"] = built.corona->n2;
    auto hubs = nlohmann::ordered_json::array();
    auto copies = nlohmann::ordered_json::array();
    for (int i = 0; i < built.corona->n1; ++i) {
      hubs.push_back(built.corona->hub(i));
      auto copy = nlohmann::ordered_json::array();
      for (int w = 0; w < built.corona->n2; ++w)
        copy.push_back(built.corona->copy_vertex(i, w));
      copies.push_back(copy);
    }
    corona["hubs"] = hubs;
    corona["copies"] = copies;
    labels["corona"] = corona;
  }
  if (opt.k >= 1) {
    KSubdivision sub = k_subdivision(g, opt.k);
    nlohmann::ordered_json ks;
    ks["k"] = opt.k;
    auto superedges = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
      nlohmann::ordered_json entry;
      entry["edge"] = {g.edges()[j].lo(), g.edges()[j].hi()};
      entry["internals"] = sub.labeling.internals[j];
      superedges.push_back(entry);
    }
    ks["superedges"] = superedges;
    labels["k-subdivision"] = ks;
    g = sub.graph;
  }

  std::string text = opt.format == "g6" ? write_graph6(g) + "\n"
                                        : write_edge_list(g);
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + opt.output);
    out << text;
  }

  std::string labels_path = opt.labels;
  if (labels_path.empty() && !labels.empty() && !opt.output.empty() &&
      opt.output != "-")
    labels_path = opt.output + ".labels.json";
  if (!labels_path.empty() && !labels.empty()) {
    std::ofstream out(labels_path, std::ios::binary);
    if (!out)
      throw ValidationError("cannot open labels file: " + labels_path);
    out << labels.dump(2) << '\n';
  }
  std::cerr << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact strong domination numbers and edge-operation audits"};
  app.require_subcommand(1);

  const std::uint64_t default_budget =
      env_u64("STRONGDOM_NODE_BUDGET", SolverConfig{}.node_budget);
  const int default_cap = static_cast<int>(
      env_u64("STRONGDOM_ORACLE_CAP", SolverConfig{}.oracle_vertex_cap));
  const unsigned default_threads = default_thread_count();

  SolveOpts solve_opts;
  solve_opts.budget = default_budget;
  solve_opts.oracle_cap = default_cap;
  auto* solve_cmd = app.add_subcommand("solve", "compute a domination number");
  solve_cmd->add_option("--input", solve_opts.input, "graph file or family spec")
      ->required();
  solve_cmd->add_option("--format", solve_opts.format, "auto|el|g6")
      ->check(CLI::IsMember({"auto", "el", "g6"}));
  solve_cmd->add_option("--mode", solve_opts.mode, "strong|weak|plain");
  solve_cmd->add_option("--method", solve_opts.method,
                        "auto|oracle|bnb|tree-dp");
  solve_cmd->add_option("--budget", solve_opts.budget, "search node budget");
  solve_cmd->add_option("--oracle-cap", solve_opts.oracle_cap,
                        "oracle vertex cap");
  solve_cmd->add_option("--output", solve_opts.output, "report file");

  AuditOpts audit_opts;
  audit_opts.budget = default_budget;
  audit_opts.oracle_cap = default_cap;
  audit_opts.threads = default_threads;
  auto* audit_cmd = app.add_subcommand("audit", "audit a bound or equality");
  audit_cmd->add_option("theorem", audit_opts.theorem,
                        "edge-deletion|edge-subdivision|edge-contraction|"
                        "corollary|corona-deletion|corona-subdivision|ksub|"
                        "fixtures")
      ->required();
  audit_cmd->add_option("--input", audit_opts.input, "graph file or family spec");
  audit_cmd->add_option("--format", audit_opts.format, "auto|el|g6")
      ->check(CLI::IsMember({"auto", "el", "g6"}));
  audit_cmd->add_option("--edge", audit_opts.edge, "edge endpoints u v")
      ->expected(2);
  audit_cmd->add_flag("--all-edges", audit_opts.all_edges, "audit every edge");
  audit_cmd->add_option("--k", audit_opts.k, "subdivision parameter");
  audit_cmd->add_option("--fixture", audit_opts.fixture, "fixture id");
  audit_cmd->add_option("--g1", audit_opts.g1, "corona factor G1");
  audit_cmd->add_option("--g2", audit_opts.g2, "corona factor G2");
  audit_cmd->add_option("--class", audit_opts.edge_class,
                        "within-g1|within-copy|cross (default: all classes)");
  audit_cmd->add_option("--g1-edge", audit_opts.g1_edge, "edge of G1")
      ->expected(2);
  audit_cmd->add_option("--g2-edge", audit_opts.g2_edge, "edge of G2")
      ->expected(2);
  audit_cmd->add_option("--copy", audit_opts.copy_index, "copy index");
  audit_cmd->add_option("--g2-vertex", audit_opts.g2_vertex, "vertex of G2");
  audit_cmd->add_option("--budget", audit_opts.budget, "search node budget");
  audit_cmd->add_option("--threads", audit_opts.threads, "worker threads");
  audit_cmd->add_option("--output", audit_opts.output, "report file");

  FuzzOpts fuzz_opts;
  fuzz_opts.budget = default_budget;
  fuzz_opts.oracle_cap = default_cap;
  fuzz_opts.threads = default_threads;
  auto* fuzz_cmd =
      app.add_subcommand("fuzz", "audit theorems on seeded random graphs");
  fuzz_cmd->add_option("--n-min", fuzz_opts.n_min, "minimum order")->required();
  fuzz_cmd->add_option("--n-max", fuzz_opts.n_max, "maximum order")->required();
  fuzz_cmd->add_option("--p", fuzz_opts.p_str, "edge probability");
  fuzz_cmd->add_option("--count", fuzz_opts.count, "number of graphs")
      ->required();
  fuzz_cmd->add_option("--seed", fuzz_opts.seed, "PRNG seed (required)")
      ->required();
  fuzz_cmd->add_option("--theorems", fuzz_opts.theorems,
                       "comma list or 'all'")
      ->delimiter(',');
  fuzz_cmd->add_option("--budget", fuzz_opts.budget, "search node budget");
  fuzz_cmd->add_option("--threads", fuzz_opts.threads, "worker threads");
  fuzz_cmd->add_option("--output", fuzz_opts.output, "report file");

  SearchOpts search_opts;
  search_opts.budget = default_budget;
  search_opts.threads = default_threads;
  auto* search_cmd = app.add_subcommand("search", "empirical searches");
  auto* eds_cmd = search_cmd->add_subcommand(
      "equal-del-sub", "graphs and edges with equal deletion and subdivision "
                       "strong domination numbers");
  eds_cmd->add_option("--max-n", search_opts.max_n,
                      "exhaustive order cap (<= 7)")
      ->required();
  eds_cmd->add_option("--seed", search_opts.seed, "PRNG seed (required)")
      ->required();
  eds_cmd->add_option("--random-count", search_opts.random_count,
                      "random n=7 batch size");
  eds_cmd->add_option("--random-p", search_opts.random_p, "edge probability");
  eds_cmd->add_option("--budget", search_opts.budget, "search node budget");
  eds_cmd->add_option("--threads", search_opts.threads, "worker threads");
  eds_cmd->add_option("--output", search_opts.output, "report file");
  search_cmd->require_subcommand(1);

  GenerateOpts gen_opts;
  auto* gen_cmd = app.add_subcommand("generate", "write a family instance");
  gen_cmd->add_option("family,--family", gen_opts.family, "family name or spec")
      ->required();
  gen_cmd->add_option("args,--args", gen_opts.args, "family arguments");
  gen_cmd->add_option("--k", gen_opts.k, "apply k-subdivision");
  gen_cmd->add_option("--format", gen_opts.format, "el|g6")
      ->check(CLI::IsMember({"el", "g6"}));
  gen_cmd->add_option("--output", gen_opts.output, "graph file ('-' = stdout)");
  gen_cmd->add_option("--labels", gen_opts.labels, "labeling sidecar file");

  try {
    app.parse(argc, argv);
    fuzz_opts.seed_set = fuzz_cmd->count("--seed") > 0;
    search_opts.seed_set = eds_cmd->count("--seed") > 0;
    if (*solve_cmd) return run_solve(solve_opts);
    if (*audit_cmd) return run_audit(audit_opts);
    if (*fuzz_cmd) return run_fuzz(fuzz_opts);
    if (*eds_cmd) return run_search(search_opts);
    if (*gen_cmd) return run_generate(gen_opts);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what();
    if (e.lower_bound() >= 0 && e.upper_bound() >= 0)
      std::cerr << " (best bounds: " << e.lower_bound() << " <= gamma <= "
                << e.upper_bound() << ")";
    std::cerr << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
