#include "strongdom/transforms.hpp"

#include <algorithm>
#include <string>

namespace strongdom {

namespace {

void require_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e))
    throw ValidationError("not an edge of the graph: " + std::to_string(e.u) +
                          "-" + std::to_string(e.v));
}

}  // namespace

Graph delete_edge(const Graph& g, const Edge& e) {
  require_edge(g, e);
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() - 1);
  for (const Edge& f : g.edges())
    if (!(f == e)) edges.push_back(f);
  return Graph::build(g.vertex_count(), std::move(edges));
}

SubdividedEdge subdivide_edge(const Graph& g, const Edge& e) {
  require_edge(g, e);
  int w = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + 1);
  for (const Edge& f : g.edges())
    if (!(f == e)) edges.push_back(f);
  edges.push_back({e.lo(), w});
  edges.push_back({e.hi(), w});
  return {Graph::build(w + 1, std::move(edges)), w};
}

ContractionResult contract_edge(const Graph& g, const Edge& e) {
  require_edge(g, e);
  int keep = e.lo();
  int gone = e.hi();
  ContractionResult result;
  result.vertex_map.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    result.vertex_map[v] = v == gone ? keep : (v > gone ? v - 1 : v);
  result.merged_vertex = keep;

  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f == e) continue;
    Edge mapped{result.vertex_map[f.u], result.vertex_map[f.v]};
    if (mapped.u == mapped.v) continue;  // loop from a triangle through e
    edges.push_back({mapped.lo(), mapped.hi()});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.graph = Graph::build(g.vertex_count() - 1, std::move(edges));
  return result;
}

KSubdivision k_subdivision(const Graph& g, int k) {
  if (k < 1) throw ValidationError("k-subdivision needs k >= 1");
  KSubdivision out;
  out.labeling.k = k;
  out.labeling.vertex_map.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out.labeling.vertex_map[v] = v;
  out.labeling.internals.assign(g.edges().size(), {});

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * g.edges().size());
  int next = g.vertex_count();
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    const Edge& e = g.edges()[j];
    if (k == 1) {
      edges.push_back(e);
      continue;
    }
    auto& internals = out.labeling.internals[j];
    internals.resize(k - 1);
    int prev = e.lo();  // interiors ordered by distance from the lower id
    for (int l = 1; l < k; ++l) {
      internals[l - 1] = next;
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, e.hi()});
  }
  out.graph = Graph::build(next, std::move(edges));
  return out;
}

}  // namespace strongdom
