#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "strongdom/graph.hpp"

namespace strongdom {

/// Degree rule a dominator y must satisfy toward an outside vertex x:
///   strong: deg(x) <= deg(y),  weak: deg(x) >= deg(y),  plain: none.
enum class DominationMode { strong, weak, plain };

std::string_view to_string(DominationMode mode);
DominationMode mode_from_string(std::string_view text);  // throws LookupError

/// True iff `dominator` is adjacent to `target` and satisfies the mode's
/// degree condition toward it.
bool dominates(const Graph& g, int dominator, int target, DominationMode mode);

struct SolverStats {
  std::uint64_t nodes = 0;    // subsets tested / search nodes / DP vertices
  std::int64_t elapsed_us = 0;
};

struct SolverConfig {
  int oracle_vertex_cap = 12;
  std::uint64_t node_budget = 50'000'000;
};

struct SolveResult {
  int gamma = 0;
  VertexSet witness;
  std::string method;  // "oracle" | "bnb" | "tree-dp"
  SolverStats stats;
};

/// Definitional check: every vertex outside `candidate` has a neighbor inside
/// satisfying the mode's degree condition. Isolated vertices outside the set
/// always fail. Throws ValidationError if the set's universe mismatches g.
bool verify(const Graph& g, const VertexSet& candidate, DominationMode mode);

/// Brute force over subsets in increasing cardinality (lexicographic within
/// a cardinality); the first verifying subset is the witness. Only for
/// graphs up to the configured vertex cap (ResourceError above it).
SolveResult gamma_oracle(const Graph& g, DominationMode mode,
                         const SolverConfig& config = {});

/// Exact branch and bound. Iterative deepening on the target size starting
/// from a packing lower bound; branches on the undominated vertex with the
/// fewest remaining candidate dominators, candidates ordered by descending
/// degree then ascending index. Exceeding the node budget throws
/// ResourceError carrying the best bounds proven so far.
SolveResult gamma_bnb(const Graph& g, DominationMode mode,
                      const SolverConfig& config = {});

/// Linear-time dynamic program for forests (three states per vertex: in the
/// set / dominated from below / left to the parent). Degrees are fixed up
/// front, so the mode's degree rule is a static orientation of each edge.
/// Throws ValidationError when g contains a cycle.
SolveResult gamma_tree_dp(const Graph& g,
                          DominationMode mode = DominationMode::strong);

/// Dispatch: tree DP on forests, branch and bound otherwise.
SolveResult solve_gamma(const Graph& g, DominationMode mode,
                        const SolverConfig& config = {});

}  // namespace strongdom
