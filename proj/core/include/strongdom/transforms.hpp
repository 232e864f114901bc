#pragma once

#include <vector>

#include "strongdom/graph.hpp"

namespace strongdom {

/// G - e: same vertex set, edge removed. Throws ValidationError if e is not
/// an edge of g.
Graph delete_edge(const Graph& g, const Edge& e);

struct SubdividedEdge {
  Graph graph;
  int new_vertex = 0;  // appended at index n
};

/// G_e: edge uv replaced by the path u - w - v through a fresh vertex w.
SubdividedEdge subdivide_edge(const Graph& g, const Edge& e);

struct ContractionResult {
  Graph graph;
  int merged_vertex = 0;        // new id of the merged endpoint pair
  std::vector<int> vertex_map;  // old id -> new id (u and v both map to it)
};

/// G/e: simple-graph contraction. u and v merge into min(u,v), ids above
/// max(u,v) compact down by one; parallel edges coalesce, loops drop.
ContractionResult contract_edge(const Graph& g, const Edge& e);

/// Provenance for G^{1/k}: original vertices keep their ids; the interior
/// vertices of the superedge replacing edge index j (in g.edges() order) are
/// internals[j][0..k-2], listed by distance 1..k-1 from the lower endpoint.
struct SubdivisionLabeling {
  int k = 1;
  std::vector<int> vertex_map;              // identity on original vertices
  std::vector<std::vector<int>> internals;  // one list per original edge

  /// Interior vertex at distance l (1-based) from the lower endpoint of the
  /// superedge that replaced edge index edge_idx.
  int internal(int edge_idx, int l) const { return internals[edge_idx][l - 1]; }
};

struct KSubdivision {
  Graph graph;
  SubdivisionLabeling labeling;
};

/// G^{1/k}: every edge becomes a path of length k. The result has
/// n + (k-1)m vertices and km edges; k = 1 returns an identical copy.
KSubdivision k_subdivision(const Graph& g, int k);

}  // namespace strongdom
