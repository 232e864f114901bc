#include "strongdom/graph.hpp"

#include <algorithm>
#include <string>

namespace strongdom {

namespace {
// matrix rows are kept up to this order (half a megabyte of bits)
constexpr int kMatrixCap = 2048;
}  // namespace

Graph Graph::build(int n, std::vector<Edge> edges) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ValidationError("edge endpoint out of range: " +
                            std::to_string(e.u) + "-" + std::to_string(e.v));
    if (e.u == e.v)
      throw ValidationError("loop edge at vertex " + std::to_string(e.u));
  }
  for (Edge& e : edges) e = Edge{e.lo(), e.hi()};
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw ValidationError("duplicate edge " + std::to_string(edges[i].u) +
                            "-" + std::to_string(edges[i].v));

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  if (n > 0 && n <= kMatrixCap) {
    g.words_per_row_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.matrix_.assign(g.words_per_row_ * n, 0);
    for (const Edge& e : g.edges_) {
      g.matrix_[e.u * g.words_per_row_ + (e.v >> 6)] |= 1ull << (e.v & 63);
      g.matrix_[e.v * g.words_per_row_ + (e.u >> 6)] |= 1ull << (e.u & 63);
    }
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  if (!matrix_.empty())
    return matrix_[u * words_per_row_ + (v >> 6)] >> (v & 63) & 1u;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::min_degree() const {
  if (n_ == 0) throw ValidationError("degree of vertex-less graph");
  int d = degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  if (n_ == 0) throw ValidationError("degree of vertex-less graph");
  int d = degree(0);
  for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw ValidationError("negative universe");
  words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= universe_)
    throw ValidationError("vertex " + std::to_string(v) +
                          " outside universe of size " +
                          std::to_string(universe_));
}

void VertexSet::insert(int v) {
  check(v);
  std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
  std::uint64_t bit = 1ull << (v & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(int v) {
  check(v);
  std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
  std::uint64_t bit = 1ull << (v & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int v = 0; v < universe_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(n, false);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return connected_components(g).size() == 1;
}

bool is_forest(const Graph& g) {
  auto comps = connected_components(g);
  return g.edge_count() ==
         g.vertex_count() - static_cast<int>(comps.size());
}

GraphStats graph_stats(const Graph& g) {
  if (g.vertex_count() == 0)
    throw ValidationError("stats of vertex-less graph");
  GraphStats s;
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) ++s.pendant_count;
  s.connected = is_connected(g);
  s.tree = s.connected && g.edge_count() == g.vertex_count() - 1;
  return s;
}

}  // namespace strongdom
