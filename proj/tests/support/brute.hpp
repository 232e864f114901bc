#pragma once

// Independent reference implementations used to freeze expected values.
// Deliberately written against the raw adjacency structure with mask
// enumeration, sharing no code with the solvers under test.

#include <bit>

#include "strongdom/graph.hpp"
#include "strongdom/solver.hpp"

namespace brute {

inline bool dominating_mask(const strongdom::Graph& g, unsigned mask,
                            strongdom::DominationMode mode) {
  using strongdom::DominationMode;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (mask >> x & 1u) continue;
    bool covered = false;
    for (int y : g.neighbors(x)) {
      if (!(mask >> y & 1u)) continue;
      bool rule_ok = true;
      if (mode == DominationMode::strong)
        rule_ok = g.degree(x) <= g.degree(y);
      else if (mode == DominationMode::weak)
        rule_ok = g.degree(x) >= g.degree(y);
      if (rule_ok) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

inline int gamma(const strongdom::Graph& g,
                 strongdom::DominationMode mode =
                     strongdom::DominationMode::strong) {
  int n = g.vertex_count();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    if (dominating_mask(g, mask, mode))
      best = std::min(best, std::popcount(mask));
  return best;
}

}  // namespace brute
