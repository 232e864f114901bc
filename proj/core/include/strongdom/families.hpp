#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongdom/graph.hpp"

namespace strongdom {

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

Graph make_path(int n);                          // P_n, n >= 1
Graph make_cycle(int n);                         // C_n, n >= 3
Graph make_complete(int n);                      // K_n, n >= 1
Graph make_complete_bipartite(int a, int b);     // K_{a,b}, a,b >= 1
Graph make_star(int leaves);                     // K_{1,leaves}, leaves >= 1
Graph make_empty(int n);                         // n isolated vertices

/// Vertex bookkeeping for a corona product G1 ∘ G2: the copy of G1 keeps ids
/// 0..n1-1 (the hubs); copy i of G2 occupies a contiguous block after them.
struct CoronaLabeling {
  int n1 = 0;
  int n2 = 0;
  int hub(int i) const { return i; }
  int copy_vertex(int i, int g2_vertex) const {
    return n1 + i * n2 + g2_vertex;
  }
};

/// One copy of g1, n1 copies of g2, hub i joined to every vertex of copy i.
std::pair<Graph, CoronaLabeling> corona_product(const Graph& g1,
                                                const Graph& g2);

// ---------------------------------------------------------------------------
// FamilySpec: parseable description of a generator instance
// ---------------------------------------------------------------------------

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  corona,
  fixture,
};

struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;             // sizes, per family
  std::vector<FamilySpec> components;  // corona: {g1 spec, g2 spec}
  std::string fixture_id;              // fixture only

  /// Compact notation: "P4", "C10", "K5", "K2,3", "S3" (star with 3 leaves),
  /// "corona(C3,K1)", "fig2-H". Throws ValidationError on anything else.
  static FamilySpec parse(std::string_view text);

  std::string to_string() const;
};

struct GeneratedGraph {
  Graph graph;
  std::optional<CoronaLabeling> corona;  // set when family == corona
};

/// Builds the named graph; validates family parameters.
GeneratedGraph generate(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Figure fixtures (tree witnesses shipped as edge-list data files)
// ---------------------------------------------------------------------------

struct Fixture {
  Graph graph;
  Edge marked;  // the distinguished edge e = uv
};

/// Loads a fixture by id ("fig1-G", "fig2-H", "fig3-G", "fig4-H") from the
/// data directory ($STRONGDOM_DATA_DIR overrides the compiled-in default).
/// Verifies the fixture is a tree. Throws LookupError for unknown ids.
Fixture load_fixture(std::string_view id);

const std::vector<std::string>& fixture_ids();

// ---------------------------------------------------------------------------
// Exhaustive enumeration of labeled graphs
// ---------------------------------------------------------------------------

inline constexpr int kEnumerationCap = 6;

std::uint64_t labeled_graph_count(int n);  // 2^(n(n-1)/2)

/// All labeled simple graphs on n vertices in mask order (pair (i,j), i<j,
/// ordered column-major as in graph6). n is capped at kEnumerationCap;
/// larger n throws ResourceError.
class LabeledGraphRange {
 public:
  explicit LabeledGraphRange(int n);

  class iterator {
   public:
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    int n_;
    std::uint64_t mask_;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, total_}; }
  std::uint64_t size() const { return total_; }

  /// Graph for a specific adjacency mask (bit b <-> b-th pair in order).
  static Graph from_mask(int n, std::uint64_t mask);

 private:
  int n_;
  std::uint64_t total_;
};

inline LabeledGraphRange enumerate_labeled_graphs(int n) {
  return LabeledGraphRange(n);
}

// ---------------------------------------------------------------------------
// Seeded randomness (own PRNG: identical streams on every platform)
// ---------------------------------------------------------------------------

struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t next_below(std::uint64_t bound);  // uniform-ish in [0, bound)
  double next_double();                           // [0, 1)
};

/// Erdős–Rényi G(n, p): each of the C(n,2) pairs included independently.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Uniform random labeled tree via a random Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace strongdom
