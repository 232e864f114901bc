#include "strongdom/families.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strongdom/io.hpp"

#ifndef STRONGDOM_DATA_DIR
#define STRONGDOM_DATA_DIR "data"
#endif

namespace strongdom {

Graph make_path(int n) {
  if (n < 1) throw ValidationError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::build(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph::build(n, std::move(edges));
}

Graph make_complete(int n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.push_back({i, j});
  return Graph::build(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw ValidationError("complete bipartite graph needs parts >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph::build(a + b, std::move(edges));
}

Graph make_star(int leaves) {
  if (leaves < 1) throw ValidationError("star needs at least one leaf");
  return make_complete_bipartite(1, leaves);
}

Graph make_empty(int n) {
  if (n < 0) throw ValidationError("negative vertex count");
  return Graph::build(n, {});
}

std::pair<Graph, CoronaLabeling> corona_product(const Graph& g1,
                                                const Graph& g2) {
  int n1 = g1.vertex_count();
  int n2 = g2.vertex_count();
  if (n1 < 1) throw ValidationError("corona product needs nonempty G1");
  if (n2 < 1) throw ValidationError("corona product needs nonempty G2");
  CoronaLabeling lab{n1, n2};
  std::vector<Edge> edges = g1.edges();
  for (int i = 0; i < n1; ++i) {
    for (const Edge& e : g2.edges())
      edges.push_back({lab.copy_vertex(i, e.u), lab.copy_vertex(i, e.v)});
    for (int w = 0; w < n2; ++w)
      edges.push_back({lab.hub(i), lab.copy_vertex(i, w)});
  }
  return {Graph::build(n1 + n1 * n2, std::move(edges)), lab};
}

// ---------------------------------------------------------------------------
// FamilySpec
// ---------------------------------------------------------------------------

namespace {

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  long long value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
    if (value > 1'000'000'000) return false;
  }
  out = static_cast<int>(value);
  return true;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ValidationError("empty family spec");

  FamilySpec spec;
  if (text.substr(0, 3) == "fig") {
    spec.family = Family::fixture;
    spec.fixture_id = std::string(text);
    return spec;
  }
  if (text.substr(0, 7) == "corona(" && text.back() == ')') {
    std::string_view inner = text.substr(7, text.size() - 8);
    // Two component specs separated by a comma; component specs may contain
    // commas themselves (K2,3), so try each top-level split point.
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        try {
          FamilySpec g1 = parse(inner.substr(0, i));
          FamilySpec g2 = parse(inner.substr(i + 1));
          spec.family = Family::corona;
          spec.components = {std::move(g1), std::move(g2)};
          return spec;
        } catch (const ValidationError&) {
          // wrong split point (comma inside K{a},{b}); keep scanning
        }
      }
    }
    throw ValidationError("cannot split corona spec: '" + std::string(text) +
                          "'");
  }

  char head = text.front();
  std::string_view rest = text.substr(1);
  int a = 0, b = 0;
  std::size_t comma = rest.find(',');
  switch (head) {
    case 'P':
      if (parse_int(rest, a)) return {Family::path, {a}};
      break;
    case 'C':
      if (parse_int(rest, a)) return {Family::cycle, {a}};
      break;
    case 'S':
      if (parse_int(rest, a)) return {Family::star, {a}};
      break;
    case 'K':
      if (comma != std::string_view::npos) {
        if (parse_int(rest.substr(0, comma), a) &&
            parse_int(rest.substr(comma + 1), b))
          return {Family::complete_bipartite, {a, b}};
      } else if (parse_int(rest, a)) {
        return {Family::complete, {a}};
      }
      break;
    default:
      break;
  }
  throw ValidationError("unrecognized family spec: '" + std::string(text) +
                        "'");
}

std::string FamilySpec::to_string() const {
  switch (family) {
    case Family::path:
      return "P" + std::to_string(params.at(0));
    case Family::cycle:
      return "C" + std::to_string(params.at(0));
    case Family::complete:
      return "K" + std::to_string(params.at(0));
    case Family::complete_bipartite:
      return "K" + std::to_string(params.at(0)) + "," +
             std::to_string(params.at(1));
    case Family::star:
      return "S" + std::to_string(params.at(0));
    case Family::corona:
      return "corona(" + components.at(0).to_string() + "," +
             components.at(1).to_string() + ")";
    case Family::fixture:
      return fixture_id;
  }
  return "?";
}

GeneratedGraph generate(const FamilySpec& spec) {
  auto param = [&](std::size_t i) -> int {
    if (i >= spec.params.size())
      throw ValidationError("missing parameter for family spec");
    return spec.params[i];
  };
  switch (spec.family) {
    case Family::path:
      return {make_path(param(0)), std::nullopt};
    case Family::cycle:
      return {make_cycle(param(0)), std::nullopt};
    case Family::complete:
      return {make_complete(param(0)), std::nullopt};
    case Family::complete_bipartite:
      return {make_complete_bipartite(param(0), param(1)), std::nullopt};
    case Family::star:
      return {make_star(param(0)), std::nullopt};
    case Family::corona: {
      if (spec.components.size() != 2)
        throw ValidationError("corona needs exactly two component specs");
      Graph g1 = generate(spec.components[0]).graph;
      Graph g2 = generate(spec.components[1]).graph;
      auto [product, labeling] = corona_product(g1, g2);
      return {std::move(product), labeling};
    }
    case Family::fixture:
      return {load_fixture(spec.fixture_id).graph, std::nullopt};
  }
  throw ValidationError("unknown family");
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

const std::vector<std::string>& fixture_ids() {
  static const std::vector<std::string> ids = {"fig1-G", "fig2-H", "fig3-G",
                                               "fig4-H"};
  return ids;
}

namespace {

std::string data_dir() {
  if (const char* env = std::getenv("STRONGDOM_DATA_DIR")) return env;
  return STRONGDOM_DATA_DIR;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open data file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Fixture load_fixture(std::string_view id) {
  const std::string dir = data_dir() + "/fixtures";
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(dir + "/fixtures.json"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixtures manifest: ") + e.what());
  }
  auto it = manifest.find(std::string(id));
  if (it == manifest.end())
    throw LookupError("unknown fixture id: '" + std::string(id) + "'");

  Fixture fx;
  fx.graph = parse_edge_list(read_file(dir + "/" + (*it)["file"].get<std::string>()));
  fx.marked = Edge{(*it)["edge"][0].get<int>(), (*it)["edge"][1].get<int>()};
  if (!fx.graph.has_edge(fx.marked))
    throw ValidationError("fixture marked edge missing from graph");
  GraphStats stats = graph_stats(fx.graph);
  if (!stats.tree)
    throw ValidationError("fixture '" + std::string(id) + "' is not a tree");
  return fx;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::uint64_t labeled_graph_count(int n) {
  if (n < 0) throw ValidationError("negative vertex count");
  return 1ull << (static_cast<unsigned>(n) * (n - 1) / 2);
}

LabeledGraphRange::LabeledGraphRange(int n) : n_(n) {
  if (n < 0) throw ValidationError("negative vertex count");
  if (n > kEnumerationCap)
    throw ResourceError("labeled-graph enumeration capped at n = " +
                        std::to_string(kEnumerationCap));
  total_ = labeled_graph_count(n);
}

Graph LabeledGraphRange::from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (mask >> bit & 1) edges.push_back({i, j});
  return Graph::build(n, std::move(edges));
}

Graph LabeledGraphRange::iterator::operator*() const {
  return from_mask(n_, mask_);
}

// ---------------------------------------------------------------------------
// Randomness
// ---------------------------------------------------------------------------

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  return bound == 0 ? 0 : next() % bound;
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw ValidationError("edge probability must be in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng.next_double() < p) edges.push_back({i, j});
  return Graph::build(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random tree needs n >= 1");
  if (n == 1) return make_empty(1);
  if (n == 2) return Graph::build(2, {{0, 1}});
  SplitMix64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(rng.next_below(n));

  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  std::vector<Edge> edges;
  // Classic decode: repeatedly join the smallest remaining leaf to the next
  // sequence entry, tracked with a moving pointer.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.push_back({leaf, x});
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      while (degree[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph::build(n, std::move(edges));
}

}  // namespace strongdom
