#pragma once

#include <cstdint>
#include <vector>

#include "strongdom/errors.hpp"

namespace strongdom {

/// Unordered pair of distinct vertices. Edge{u,v} and Edge{v,u} compare equal.
struct Edge {
  int u = 0;
  int v = 0;

  int lo() const { return u < v ? u : v; }
  int hi() const { return u < v ? v : u; }

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.lo() == b.lo() && a.hi() == b.hi();
  }
  // Normalized lexicographic order, used for canonical edge lists.
  friend bool operator<(const Edge& a, const Edge& b) {
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    return a.hi() < b.hi();
  }
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates simplicity (no loops, no parallel edges, endpoints
/// in range). Neighbor lists are sorted ascending; edges() is the canonical
/// sorted list with lo < hi. All queries are const and safe to share across
/// threads.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor; throws ValidationError on loops, duplicate
  /// edges, or endpoints out of range.
  static Graph build(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_vertex(int v) const { return v >= 0 && v < n_; }
  bool has_edge(int u, int v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  int min_degree() const;  // requires n >= 1
  int max_degree() const;  // requires n >= 1

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  // adjacency-matrix bits for O(1) has_edge, kept while the matrix is small;
  // row v starts at word v * words_per_row_
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> matrix_;
};

/// Subset of the vertices of an n-vertex graph, bitset backed.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet of(int universe, std::initializer_list<int> members);

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int v) const {
    return words_[static_cast<std::size_t>(v) >> 6] >> (v & 63) & 1u;
  }
  void insert(int v);
  void erase(int v);

  /// Members in ascending order.
  std::vector<int> to_vector() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void check(int v) const;
  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GraphStats {
  int min_degree = 0;
  int max_degree = 0;
  int pendant_count = 0;  // vertices of degree 1
  bool connected = false;
  bool tree = false;
};

/// Degree extremes, pendant count, connectivity and tree-ness.
/// Throws ValidationError for the vertex-less graph.
GraphStats graph_stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

/// Connected components as vertex id lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace strongdom
