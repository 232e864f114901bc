#include "strongdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

namespace strongdom {

std::string_view to_string(DominationMode mode) {
  switch (mode) {
    case DominationMode::strong:
      return "strong";
    case DominationMode::weak:
      return "weak";
    case DominationMode::plain:
      return "plain";
  }
  return "?";
}

DominationMode mode_from_string(std::string_view text) {
  if (text == "strong") return DominationMode::strong;
  if (text == "weak") return DominationMode::weak;
  if (text == "plain") return DominationMode::plain;
  throw LookupError("unknown domination mode: '" + std::string(text) + "'");
}

namespace {

// Degree rule toward an outside vertex x from a prospective dominator y.
bool degree_rule_ok(DominationMode mode, int deg_x, int deg_y) {
  switch (mode) {
    case DominationMode::strong:
      return deg_x <= deg_y;
    case DominationMode::weak:
      return deg_x >= deg_y;
    case DominationMode::plain:
      return true;
  }
  return false;
}

using Clock = std::chrono::steady_clock;

std::int64_t us_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                               start)
      .count();
}

// Flat dynamic bitset used by the search; one row per vertex fits in a couple
// of words for everything this solver is pointed at.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int n = 0) : w((static_cast<std::size_t>(n) + 63) / 64, 0) {}
  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
  bool test(int i) const {
    return w[static_cast<std::size_t>(i) >> 6] >> (i & 63) & 1u;
  }
  int count() const {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (std::uint64_t x : w)
      if (x) return false;
    return true;
  }
  int count_and(const Bits& other) const {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      c += std::popcount(w[i] & other.w[i]);
    return c;
  }
  Bits and_not(const Bits& other) const {
    Bits out = *this;
    for (std::size_t i = 0; i < w.size(); ++i) out.w[i] &= ~other.w[i];
    return out;
  }
};

}  // namespace

bool dominates(const Graph& g, int dominator, int target,
               DominationMode mode) {
  return g.has_edge(dominator, target) &&
         degree_rule_ok(mode, g.degree(target), g.degree(dominator));
}

bool verify(const Graph& g, const VertexSet& candidate, DominationMode mode) {
  if (candidate.universe() != g.vertex_count())
    throw ValidationError("vertex set universe does not match the graph");
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (candidate.contains(x)) continue;
    bool covered = false;
    for (int y : g.neighbors(x)) {
      if (candidate.contains(y) &&
          degree_rule_ok(mode, g.degree(x), g.degree(y))) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

SolveResult gamma_oracle(const Graph& g, DominationMode mode,
                         const SolverConfig& config) {
  const auto start = Clock::now();
  const int n = g.vertex_count();
  if (n > config.oracle_vertex_cap)
    throw ResourceError("oracle limited to " +
                        std::to_string(config.oracle_vertex_cap) +
                        " vertices, got " + std::to_string(n));
  SolveResult result;
  result.method = "oracle";
  for (int s = 0; s <= n; ++s) {
    // subsets of size s in lexicographic index order
    std::vector<int> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      VertexSet candidate(n);
      for (int v : pick) candidate.insert(v);
      ++result.stats.nodes;
      if (verify(g, candidate, mode)) {
        result.gamma = s;
        result.witness = candidate;
        result.stats.elapsed_us = us_since(start);
        return result;
      }
      int i = s - 1;
      while (i >= 0 && pick[i] == n - s + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // unreachable: the full vertex set always verifies
  throw Error("oracle exhausted all subsets");
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

namespace {

struct BnbContext {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int n;
  std::vector<Bits> cover;  // cover[y]: {y} plus the vertices y can dominate
  std::vector<std::vector<int>> cand;  // cand[x]: possible dominators of x
  std::vector<int> chosen;
  long long budget_lower = 0;  // bounds reported if the budget runs out
  long long budget_upper = 0;

  BnbContext(const Graph& graph, const SolverConfig& config)
      : g(graph), budget(config.node_budget), n(graph.vertex_count()) {}

  bool dfs(const Bits& undominated, int remaining) {
    if (++nodes > budget)
      throw ResourceError("node budget exhausted", budget_lower, budget_upper);
    if (undominated.none()) return true;
    if (remaining == 0) return false;

    int need = undominated.count();
    int best_single = 0;
    for (int y = 0; y < n; ++y)
      best_single = std::max(best_single, cover[y].count_and(undominated));
    if (static_cast<long long>(best_single) * remaining < need) return false;

    // branch on the undominated vertex with the fewest candidate dominators
    int pick = -1;
    std::size_t fewest = 0;
    for (int x = 0; x < n; ++x) {
      if (!undominated.test(x)) continue;
      if (pick < 0 || cand[x].size() < fewest) {
        pick = x;
        fewest = cand[x].size();
      }
    }
    for (int y : cand[pick]) {
      chosen.push_back(y);
      if (dfs(undominated.and_not(cover[y]), remaining - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

// Sound lower bound: per component, ceil(n_c / (max component degree + 1));
// isolated vertices contribute 1 apiece.
int packing_lower_bound(const Graph& g) {
  int bound = 0;
  for (const auto& comp : connected_components(g)) {
    int max_deg = 0;
    for (int v : comp) max_deg = std::max(max_deg, g.degree(v));
    bound += (static_cast<int>(comp.size()) + max_deg) / (max_deg + 1);
  }
  return bound;
}

}  // namespace

SolveResult gamma_bnb(const Graph& g, DominationMode mode,
                      const SolverConfig& config) {
  const auto start = Clock::now();
  const int n = g.vertex_count();
  SolveResult result;
  result.method = "bnb";
  result.witness = VertexSet(n);
  if (n == 0) return result;

  BnbContext ctx(g, config);
  ctx.cover.assign(n, Bits(n));
  ctx.cand.assign(n, {});
  for (int y = 0; y < n; ++y) {
    ctx.cover[y].set(y);
    for (int x : g.neighbors(y))
      if (degree_rule_ok(mode, g.degree(x), g.degree(y)))
        ctx.cover[y].set(x);
  }
  for (int x = 0; x < n; ++x) {
    auto& c = ctx.cand[x];
    c.push_back(x);
    for (int y : g.neighbors(x))
      if (degree_rule_ok(mode, g.degree(x), g.degree(y))) c.push_back(y);
    std::sort(c.begin(), c.end(), [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
  }

  // Greedy cover gives the upper bound carried by budget errors.
  int greedy = 0;
  {
    Bits undominated(n);
    for (int v = 0; v < n; ++v) undominated.set(v);
    while (!undominated.none()) {
      int best = -1, best_gain = -1;
      for (int y = 0; y < n; ++y) {
        int gain = ctx.cover[y].count_and(undominated);
        if (gain > best_gain) {
          best_gain = gain;
          best = y;
        }
      }
      undominated = undominated.and_not(ctx.cover[best]);
      ++greedy;
    }
  }
  ctx.budget_upper = greedy;

  Bits all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  for (int target = packing_lower_bound(g); target <= n; ++target) {
    ctx.budget_lower = target;
    ctx.chosen.clear();
    if (ctx.dfs(all, target)) {
      for (int v : ctx.chosen) result.witness.insert(v);
      result.gamma = static_cast<int>(ctx.chosen.size());
      result.stats.nodes = ctx.nodes;
      result.stats.elapsed_us = us_since(start);
      return result;
    }
  }
  throw Error("search failed to reach the trivial all-vertices set");
}

// ---------------------------------------------------------------------------
// Forest dynamic program
// ---------------------------------------------------------------------------

namespace {

constexpr int kInf = 1 << 28;

// Per-vertex states:
//   0: in the set
//   1: outside, dominated by one of its children
//   2: outside, left to the parent (cost excludes the parent's help)
struct TreeDp {
  const Graph& g;
  DominationMode mode;
  std::vector<int> f0, f1, f2, parent, order;
  std::vector<std::vector<int>> children;

  TreeDp(const Graph& graph, DominationMode m)
      : g(graph),
        mode(m),
        f0(graph.vertex_count()),
        f1(graph.vertex_count()),
        f2(graph.vertex_count()),
        parent(graph.vertex_count(), -1),
        children(graph.vertex_count()) {}

  bool can_dominate(int y, int x) const {
    return degree_rule_ok(mode, g.degree(x), g.degree(y));
  }

  void root_component(int root, std::vector<bool>& seen) {
    std::vector<int> stack{root};
    seen[root] = true;
    order.clear();
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        parent[w] = v;
        children[v].push_back(w);
        stack.push_back(w);
      }
    }
  }

  void run(int root) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int v = *it;
      int in_set = 1, base = 0, penalty = kInf;
      for (int c : children[v]) {
        int m01 = std::min(f0[c], f1[c]);
        int opt = m01;
        if (can_dominate(v, c)) opt = std::min(opt, f2[c]);
        in_set += opt;
        base += m01;
        if (can_dominate(c, v)) penalty = std::min(penalty, f0[c] - m01);
      }
      f0[v] = in_set;
      f2[v] = std::min(base, kInf);
      f1[v] = penalty >= kInf ? kInf : base + penalty;
    }
    (void)root;
  }

  void assign(int root, VertexSet& witness) const {
    std::vector<int> state(g.vertex_count(), -1);
    state[root] = f0[root] <= f1[root] ? 0 : 1;
    for (int v : order) {
      int st = state[v];
      if (st == 0) {
        witness.insert(v);
        for (int c : children[v]) {
          int m01 = std::min(f0[c], f1[c]);
          int opt = m01;
          if (can_dominate(v, c)) opt = std::min(opt, f2[c]);
          if (f0[c] == opt)
            state[c] = 0;
          else if (f1[c] == opt)
            state[c] = 1;
          else
            state[c] = 2;
        }
      } else {
        for (int c : children[v]) state[c] = f0[c] <= f1[c] ? 0 : 1;
        if (st == 1) {
          // make sure one child both dominates v and sits in the set
          bool satisfied = false;
          for (int c : children[v])
            if (state[c] == 0 && can_dominate(c, v)) satisfied = true;
          if (!satisfied) {
            int best = -1, best_cost = kInf;
            for (int c : children[v]) {
              if (!can_dominate(c, v)) continue;
              int cost = f0[c] - std::min(f0[c], f1[c]);
              if (cost < best_cost) {
                best_cost = cost;
                best = c;
              }
            }
            state[best] = 0;
          }
        }
      }
    }
  }
};

}  // namespace

SolveResult gamma_tree_dp(const Graph& g, DominationMode mode) {
  const auto start = Clock::now();
  if (!is_forest(g)) throw ValidationError("tree DP requires a forest");
  const int n = g.vertex_count();
  SolveResult result;
  result.method = "tree-dp";
  result.witness = VertexSet(n);

  TreeDp dp(g, mode);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    dp.root_component(root, seen);
    dp.run(root);
    result.gamma += std::min(dp.f0[root], dp.f1[root]);
    dp.assign(root, result.witness);
  }
  result.stats.nodes = static_cast<std::uint64_t>(n);
  result.stats.elapsed_us = us_since(start);
  return result;
}

SolveResult solve_gamma(const Graph& g, DominationMode mode,
                        const SolverConfig& config) {
  if (is_forest(g)) return gamma_tree_dp(g, mode);
  return gamma_bnb(g, mode, config);
}

}  // namespace strongdom
