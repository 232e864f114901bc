#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strongdom/families.hpp"
#include "strongdom/graph.hpp"
#include "strongdom/io.hpp"
#include "strongdom/rational.hpp"
#include "strongdom/solver.hpp"

namespace strongdom {

// ---------------------------------------------------------------------------
// Closed-form values
// ---------------------------------------------------------------------------

/// ceil(n/3), the strong domination number of both P_n and C_n. n >= 1
/// (cycles additionally need n >= 3, which make_cycle enforces).
long long gamma_path_cycle(long long n);

/// Exact value of gamma_st(G^{1/k}) for graphs with min degree >= 3 (and the
/// upper bound for min degree >= 2): n for k in {2,3}, else n + m*ceil((k-3)/3).
long long ksub_value(long long n, long long m, long long k);

/// Upper bound on gamma_st(G^{1/k}) for graphs with t pendant vertices,
/// 1 <= t <= n-1, t <= m: n for k in {2,3}, else
/// n + t*ceil((k-4)/3) + (m-t)*ceil((k-3)/3).
long long ksub_pendant_upper(long long n, long long m, long long t,
                             long long k);

// ---------------------------------------------------------------------------
// Audit records
// ---------------------------------------------------------------------------

enum class AuditStatus { applicable, not_applicable };

/// One bound/equality check: every quantity in the statement, the verdict,
/// and tightness flags (equality on the corresponding side).
struct BoundAudit {
  std::string theorem;
  std::string instance;
  std::string method;  // solver method(s) used, "+"-joined when mixed
  std::vector<std::pair<std::string, long long>> quantities;
  bool pass = false;
  bool tight_lower = false;
  bool tight_upper = false;
  AuditStatus status = AuditStatus::applicable;
  std::string reason;  // set when not applicable

  long long quantity(std::string_view name) const;  // LookupError if missing
};

/// The sandwich combining the three operation bounds:
/// (alpha-beta)/3 <= gamma_st(G) <= (alpha+beta+2)/3 with
/// alpha = gamma_st(G-e) + gamma_st(G_e) + gamma_st(G/e),
/// beta = deg(u) + deg(v). Exact rational comparison.
struct CorollaryAudit {
  std::string instance;
  std::string method;
  long long alpha = 0;
  long long beta = 0;
  Rational lower;
  Rational upper;
  long long gamma = 0;
  bool pass = false;
  AuditStatus status = AuditStatus::applicable;
  std::string reason;
};

struct KSubCheck {
  enum class Kind { exact, upper, pendant_upper };
  Kind kind = Kind::exact;
  long long predicted = 0;
  bool pass = false;
  bool tight = false;  // solved == predicted
};

std::string_view to_string(KSubCheck::Kind kind);

/// k-subdivision audit; all applicable cases (by min degree and pendant
/// count) are checked against the one solved value.
struct KSubAudit {
  std::string instance;
  std::string method;
  long long n = 0, m = 0, k = 0;
  long long min_degree = 0, pendants = 0;
  long long solved = 0;
  std::vector<KSubCheck> checks;
  AuditStatus status = AuditStatus::applicable;
  std::string reason;
};

// ---------------------------------------------------------------------------
// Per-theorem auditors. Gammas come from solve_gamma (tree DP on forests,
// branch and bound otherwise); the method used is recorded.
// ---------------------------------------------------------------------------

/// gamma_st(G)-1 <= gamma_st(G-e) <= gamma_st(G)+deg(u)+deg(v)-2, G != K2.
BoundAudit audit_edge_deletion(const Graph& g, const Edge& e,
                               const SolverConfig& config = {});

/// gamma_st(G) <= gamma_st(G_e) <= gamma_st(G)+1 (every graph, K2 included).
BoundAudit audit_edge_subdivision(const Graph& g, const Edge& e,
                                  const SolverConfig& config = {});

/// gamma_st(G)-deg(u)-deg(v)+3 <= gamma_st(G/e) <= gamma_st(G)+1, G != K2.
BoundAudit audit_edge_contraction(const Graph& g, const Edge& e,
                                  const SolverConfig& config = {});

CorollaryAudit audit_corollary(const Graph& g, const Edge& e,
                               const SolverConfig& config = {});

/// Abstract edge class of a corona product G1 ∘ G2, so callers cannot
/// mislabel the case being audited.
struct EdgeClass {
  enum class Kind { within_g1, within_copy, cross };
  Kind kind = Kind::within_g1;
  Edge g1_edge;       // within_g1
  int copy_index = 0; // within_copy, cross
  Edge g2_edge;       // within_copy
  int g2_vertex = 0;  // cross

  static EdgeClass within_g1_edge(Edge e);
  static EdgeClass within_copy_edge(int copy, Edge e);
  static EdgeClass cross_edge(int copy, int g2_vertex);
  std::string to_string() const;
};

/// Deleting an edge of G1 ∘ G2 keeps gamma_st for edges inside G1 or inside
/// a copy of G2, and raises it by exactly 1 for hub-to-copy edges.
BoundAudit audit_corona_deletion(const Graph& g1, const Graph& g2,
                                 const EdgeClass& cls,
                                 const SolverConfig& config = {});

/// Subdividing keeps gamma_st for edges inside G1 and raises it by exactly 1
/// for copy edges and hub-to-copy edges.
BoundAudit audit_corona_subdivision(const Graph& g1, const Graph& g2,
                                    const EdgeClass& cls,
                                    const SolverConfig& config = {});

/// Solves gamma_st(G^{1/k}) and checks it against every applicable
/// k-subdivision case (exact for min degree >= 3, upper for >= 2,
/// pendant upper when 1 <= t <= n-1).
KSubAudit audit_ksub(const Graph& g, int k, const SolverConfig& config = {});

/// Runs the matching bound auditor on a figure fixture (deletion for
/// fig1/fig2, contraction for fig3/fig4) with the tree-DP solver underneath,
/// reporting tightness and measured slack; equality is never assumed.
BoundAudit audit_fixture_tightness(std::string_view fixture_id,
                                   const SolverConfig& config = {});

// ---------------------------------------------------------------------------
// Empirical search for gamma_st(G-e) = gamma_st(G_e)
// ---------------------------------------------------------------------------

struct SearchPool {
  int exhaustive_max_n = 0;  // 0 disables; capped by the enumeration limit
  std::vector<Graph> extra;  // explicit instances, audited in order
  int random_n = 0;          // 0 disables the random batch
  int random_count = 0;
  double random_p = 0.5;
  std::uint64_t seed = 0;
};

struct SearchHit {
  Graph graph;
  std::string graph6;
  Edge edge;
  long long gamma_deleted = 0;
  long long gamma_subdivided = 0;
};

/// Every (graph, edge) pair in the pool whose deletion and subdivision give
/// the same strong domination number. Deterministic order: exhaustive pool
/// by (n, adjacency mask, edge), then extras, then the random batch.
std::vector<SearchHit> search_equal_deletion_subdivision(
    const SearchPool& pool, const SolverConfig& config = {},
    unsigned threads = 1);

// ---------------------------------------------------------------------------
// Report conversions (JSON-lines schema in io)
// ---------------------------------------------------------------------------

ReportRecord to_record(const BoundAudit& audit);
ReportRecord to_record(const CorollaryAudit& audit);
std::vector<ReportRecord> to_records(const KSubAudit& audit);
ReportRecord to_record(const SearchHit& hit);
ReportRecord to_record(const SolveResult& result, std::string_view instance,
                       DominationMode mode);

}  // namespace strongdom
