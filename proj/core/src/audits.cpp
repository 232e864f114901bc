#include "strongdom/audits.hpp"

#include <algorithm>

#include "strongdom/parallel.hpp"
#include "strongdom/transforms.hpp"

namespace strongdom {

namespace {

// Ceiling division that is exact for the small negative numerators the
// k-subdivision formulas produce (k-3 >= -1 for k >= 2).
long long ceil_div(long long a, long long b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

bool is_k2(const Graph& g) {
  return g.vertex_count() == 2 && g.edge_count() == 1;
}

struct GammaRun {
  long long value = 0;
  std::string method;
};

GammaRun run_gamma(const Graph& g, const SolverConfig& config) {
  SolveResult r = solve_gamma(g, DominationMode::strong, config);
  return {r.gamma, r.method};
}

std::string join_methods(std::initializer_list<std::string> methods) {
  std::string out;
  for (const auto& m : methods) {
    if (m.empty() || out.find(m) != std::string::npos) continue;
    if (!out.empty()) out += "+";
    out += m;
  }
  return out;
}

std::string edge_str(const Edge& e) {
  return std::to_string(e.lo()) + "-" + std::to_string(e.hi());
}

std::string describe(const Graph& g, const Edge& e) {
  std::string base =
      g.vertex_count() <= 20
          ? "g6=" + write_graph6(g)
          : "n=" + std::to_string(g.vertex_count()) +
                ";m=" + std::to_string(g.edge_count());
  return base + ";e=" + edge_str(e);
}

BoundAudit not_applicable(std::string theorem, std::string instance,
                          std::string reason) {
  BoundAudit audit;
  audit.theorem = std::move(theorem);
  audit.instance = std::move(instance);
  audit.status = AuditStatus::not_applicable;
  audit.reason = std::move(reason);
  audit.pass = true;  // excluded, not failed
  return audit;
}

}  // namespace

long long BoundAudit::quantity(std::string_view name) const {
  for (const auto& [key, value] : quantities)
    if (key == name) return value;
  throw LookupError("audit has no quantity '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

long long gamma_path_cycle(long long n) {
  if (n < 1) throw ValidationError("gamma formula needs n >= 1");
  return ceil_div(n, 3);
}

long long ksub_value(long long n, long long m, long long k) {
  if (k < 2) throw ValidationError("k-subdivision value needs k >= 2");
  if (k == 2 || k == 3) return n;
  return n + m * ceil_div(k - 3, 3);
}

long long ksub_pendant_upper(long long n, long long m, long long t,
                             long long k) {
  if (k < 2) throw ValidationError("pendant bound needs k >= 2");
  if (t < 1 || t > n - 1)
    throw ValidationError("pendant bound needs 1 <= t <= n-1");
  if (t > m) throw ValidationError("pendant bound needs t <= m");
  if (k == 2 || k == 3) return n;
  return n + t * ceil_div(k - 4, 3) + (m - t) * ceil_div(k - 3, 3);
}

// ---------------------------------------------------------------------------
// Edge-operation auditors
// ---------------------------------------------------------------------------

BoundAudit audit_edge_deletion(const Graph& g, const Edge& e,
                               const SolverConfig& config) {
  if (!g.has_edge(e))
    throw ValidationError("audit needs an edge of the graph");
  std::string instance = describe(g, e);
  if (is_k2(g)) return not_applicable("edge-deletion", instance, "G is K2");

  GammaRun base = run_gamma(g, config);
  GammaRun deleted = run_gamma(delete_edge(g, e), config);
  long long du = g.degree(e.lo()), dv = g.degree(e.hi());
  long long lower = base.value - 1;
  long long upper = base.value + du + dv - 2;

  BoundAudit audit;
  audit.theorem = "edge-deletion";
  audit.instance = std::move(instance);
  audit.method = join_methods({base.method, deleted.method});
  audit.quantities = {{"gamma", base.value},
                      {"gamma_deleted", deleted.value},
                      {"deg_u", du},
                      {"deg_v", dv},
                      {"lower", lower},
                      {"upper", upper},
                      {"slack_lower", deleted.value - lower},
                      {"slack_upper", upper - deleted.value}};
  audit.pass = lower <= deleted.value && deleted.value <= upper;
  audit.tight_lower = deleted.value == lower;
  audit.tight_upper = deleted.value == upper;
  return audit;
}

BoundAudit audit_edge_subdivision(const Graph& g, const Edge& e,
                                  const SolverConfig& config) {
  if (!g.has_edge(e))
    throw ValidationError("audit needs an edge of the graph");
  GammaRun base = run_gamma(g, config);
  GammaRun sub = run_gamma(subdivide_edge(g, e).graph, config);
  long long lower = base.value;
  long long upper = base.value + 1;

  BoundAudit audit;
  audit.theorem = "edge-subdivision";
  audit.instance = describe(g, e);
  audit.method = join_methods({base.method, sub.method});
  audit.quantities = {{"gamma", base.value},
                      {"gamma_subdivided", sub.value},
                      {"lower", lower},
                      {"upper", upper},
                      {"slack_lower", sub.value - lower},
                      {"slack_upper", upper - sub.value}};
  audit.pass = lower <= sub.value && sub.value <= upper;
  audit.tight_lower = sub.value == lower;
  audit.tight_upper = sub.value == upper;
  return audit;
}

BoundAudit audit_edge_contraction(const Graph& g, const Edge& e,
                                  const SolverConfig& config) {
  if (!g.has_edge(e))
    throw ValidationError("audit needs an edge of the graph");
  std::string instance = describe(g, e);
  if (is_k2(g)) return not_applicable("edge-contraction", instance, "G is K2");

  GammaRun base = run_gamma(g, config);
  GammaRun contracted = run_gamma(contract_edge(g, e).graph, config);
  long long du = g.degree(e.lo()), dv = g.degree(e.hi());
  long long lower = base.value - du - dv + 3;
  long long upper = base.value + 1;

  BoundAudit audit;
  audit.theorem = "edge-contraction";
  audit.instance = std::move(instance);
  audit.method = join_methods({base.method, contracted.method});
  audit.quantities = {{"gamma", base.value},
                      {"gamma_contracted", contracted.value},
                      {"deg_u", du},
                      {"deg_v", dv},
                      {"lower", lower},
                      {"upper", upper},
                      {"slack_lower", contracted.value - lower},
                      {"slack_upper", upper - contracted.value}};
  audit.pass = lower <= contracted.value && contracted.value <= upper;
  audit.tight_lower = contracted.value == lower;
  audit.tight_upper = contracted.value == upper;
  return audit;
}

CorollaryAudit audit_corollary(const Graph& g, const Edge& e,
                               const SolverConfig& config) {
  if (!g.has_edge(e))
    throw ValidationError("audit needs an edge of the graph");
  CorollaryAudit audit;
  audit.instance = describe(g, e);
  if (is_k2(g)) {
    audit.status = AuditStatus::not_applicable;
    audit.reason = "G is K2";
    audit.pass = true;
    return audit;
  }
  GammaRun base = run_gamma(g, config);
  GammaRun deleted = run_gamma(delete_edge(g, e), config);
  GammaRun sub = run_gamma(subdivide_edge(g, e).graph, config);
  GammaRun contracted = run_gamma(contract_edge(g, e).graph, config);
  audit.method = join_methods(
      {base.method, deleted.method, sub.method, contracted.method});
  audit.alpha = deleted.value + sub.value + contracted.value;
  audit.beta = g.degree(e.lo()) + g.degree(e.hi());
  audit.lower = Rational(audit.alpha - audit.beta, 3);
  audit.upper = Rational(audit.alpha + audit.beta + 2, 3);
  audit.gamma = base.value;
  audit.pass = audit.lower <= Rational(audit.gamma) &&
               Rational(audit.gamma) <= audit.upper;
  return audit;
}

// ---------------------------------------------------------------------------
// Corona auditors
// ---------------------------------------------------------------------------

EdgeClass EdgeClass::within_g1_edge(Edge e) {
  EdgeClass cls;
  cls.kind = Kind::within_g1;
  cls.g1_edge = e;
  return cls;
}

EdgeClass EdgeClass::within_copy_edge(int copy, Edge e) {
  EdgeClass cls;
  cls.kind = Kind::within_copy;
  cls.copy_index = copy;
  cls.g2_edge = e;
  return cls;
}

EdgeClass EdgeClass::cross_edge(int copy, int g2_vertex) {
  EdgeClass cls;
  cls.kind = Kind::cross;
  cls.copy_index = copy;
  cls.g2_vertex = g2_vertex;
  return cls;
}

std::string EdgeClass::to_string() const {
  switch (kind) {
    case Kind::within_g1:
      return "g1-edge(" + edge_str(g1_edge) + ")";
    case Kind::within_copy:
      return "copy-edge(copy=" + std::to_string(copy_index) +
             ",e=" + edge_str(g2_edge) + ")";
    case Kind::cross:
      return "cross(copy=" + std::to_string(copy_index) +
             ",g2v=" + std::to_string(g2_vertex) + ")";
  }
  return "?";
}

namespace {

Edge resolve_corona_edge(const Graph& g1, const Graph& g2,
                         const CoronaLabeling& lab, const EdgeClass& cls) {
  switch (cls.kind) {
    case EdgeClass::Kind::within_g1:
      if (!g1.has_edge(cls.g1_edge))
        throw ValidationError("edge class names a non-edge of G1");
      return {cls.g1_edge.lo(), cls.g1_edge.hi()};
    case EdgeClass::Kind::within_copy:
      if (cls.copy_index < 0 || cls.copy_index >= lab.n1)
        throw ValidationError("edge class copy index out of range");
      if (!g2.has_edge(cls.g2_edge))
        throw ValidationError("edge class names a non-edge of G2");
      return {lab.copy_vertex(cls.copy_index, cls.g2_edge.lo()),
              lab.copy_vertex(cls.copy_index, cls.g2_edge.hi())};
    case EdgeClass::Kind::cross:
      if (cls.copy_index < 0 || cls.copy_index >= lab.n1)
        throw ValidationError("edge class copy index out of range");
      if (cls.g2_vertex < 0 || cls.g2_vertex >= lab.n2)
        throw ValidationError("edge class G2 vertex out of range");
      return {lab.hub(cls.copy_index),
              lab.copy_vertex(cls.copy_index, cls.g2_vertex)};
  }
  throw ValidationError("unknown edge class");
}

BoundAudit audit_corona(const Graph& g1, const Graph& g2, const EdgeClass& cls,
                        const SolverConfig& config, bool subdivision) {
  auto [product, lab] = corona_product(g1, g2);
  Edge target = resolve_corona_edge(g1, g2, lab, cls);

  long long delta = 0;
  if (subdivision)
    delta = cls.kind == EdgeClass::Kind::within_g1 ? 0 : 1;
  else
    delta = cls.kind == EdgeClass::Kind::cross ? 1 : 0;

  GammaRun base = run_gamma(product, config);
  Graph modified = subdivision ? subdivide_edge(product, target).graph
                               : delete_edge(product, target);
  GammaRun after = run_gamma(modified, config);
  long long predicted = base.value + delta;

  BoundAudit audit;
  audit.theorem = subdivision ? "corona-subdivision" : "corona-deletion";
  audit.instance = "corona(g6=" + write_graph6(g1) + ",g6=" + write_graph6(g2) +
                   ");" + cls.to_string();
  audit.method = join_methods({base.method, after.method});
  audit.quantities = {
      {"n1", lab.n1},
      {"n2", lab.n2},
      {"gamma", base.value},
      {subdivision ? "gamma_subdivided" : "gamma_deleted", after.value},
      {"predicted_delta", delta},
      {"measured_delta", after.value - base.value},
      {"lower", predicted},
      {"upper", predicted}};
  audit.pass = after.value == predicted;
  audit.tight_lower = audit.pass;
  audit.tight_upper = audit.pass;
  return audit;
}

}  // namespace

BoundAudit audit_corona_deletion(const Graph& g1, const Graph& g2,
                                 const EdgeClass& cls,
                                 const SolverConfig& config) {
  return audit_corona(g1, g2, cls, config, /*subdivision=*/false);
}

BoundAudit audit_corona_subdivision(const Graph& g1, const Graph& g2,
                                    const EdgeClass& cls,
                                    const SolverConfig& config) {
  return audit_corona(g1, g2, cls, config, /*subdivision=*/true);
}

// ---------------------------------------------------------------------------
// k-subdivision auditor
// ---------------------------------------------------------------------------

std::string_view to_string(KSubCheck::Kind kind) {
  switch (kind) {
    case KSubCheck::Kind::exact:
      return "exact";
    case KSubCheck::Kind::upper:
      return "upper";
    case KSubCheck::Kind::pendant_upper:
      return "pendant-upper";
  }
  return "?";
}

KSubAudit audit_ksub(const Graph& g, int k, const SolverConfig& config) {
  if (k < 2) throw ValidationError("k-subdivision audit needs k >= 2");
  if (g.vertex_count() == 0)
    throw ValidationError("k-subdivision audit needs a nonempty graph");
  GraphStats stats = graph_stats(g);

  KSubAudit audit;
  audit.n = g.vertex_count();
  audit.m = g.edge_count();
  audit.k = k;
  audit.min_degree = stats.min_degree;
  audit.pendants = stats.pendant_count;
  audit.instance = (g.vertex_count() <= 20
                        ? "g6=" + write_graph6(g)
                        : "n=" + std::to_string(audit.n) +
                              ";m=" + std::to_string(audit.m)) +
                   ";k=" + std::to_string(k);

  bool exact_case = stats.min_degree >= 3;
  bool upper_case = stats.min_degree >= 2;
  bool pendant_case = audit.pendants >= 1 && audit.pendants <= audit.n - 1 &&
                      audit.pendants <= audit.m;
  if (!exact_case && !upper_case && !pendant_case) {
    audit.status = AuditStatus::not_applicable;
    audit.reason = "min degree " + std::to_string(stats.min_degree) + " and " +
                   std::to_string(audit.pendants) +
                   " pendant vertices fit no case";
    return audit;
  }

  GammaRun solved = run_gamma(k_subdivision(g, k).graph, config);
  audit.method = solved.method;
  audit.solved = solved.value;

  auto add_check = [&](KSubCheck::Kind kind, long long predicted) {
    KSubCheck check;
    check.kind = kind;
    check.predicted = predicted;
    check.tight = solved.value == predicted;
    check.pass = kind == KSubCheck::Kind::exact ? check.tight
                                                : solved.value <= predicted;
    audit.checks.push_back(check);
  };
  if (exact_case) add_check(KSubCheck::Kind::exact, ksub_value(audit.n, audit.m, k));
  if (upper_case) add_check(KSubCheck::Kind::upper, ksub_value(audit.n, audit.m, k));
  if (pendant_case)
    add_check(KSubCheck::Kind::pendant_upper,
              ksub_pendant_upper(audit.n, audit.m, audit.pendants, k));
  return audit;
}

// ---------------------------------------------------------------------------
// Fixture tightness
// ---------------------------------------------------------------------------

BoundAudit audit_fixture_tightness(std::string_view fixture_id,
                                   const SolverConfig& config) {
  Fixture fx = load_fixture(fixture_id);
  bool deletion = fixture_id == "fig1-G" || fixture_id == "fig2-H";
  BoundAudit audit = deletion
                         ? audit_edge_deletion(fx.graph, fx.marked, config)
                         : audit_edge_contraction(fx.graph, fx.marked, config);
  audit.instance =
      "fixture=" + std::string(fixture_id) + ";e=" + edge_str(fx.marked);
  return audit;
}

// ---------------------------------------------------------------------------
// Problem search: gamma_st(G-e) = gamma_st(G_e)
// ---------------------------------------------------------------------------

std::vector<SearchHit> search_equal_deletion_subdivision(
    const SearchPool& pool, const SolverConfig& config, unsigned threads) {
  std::vector<Graph> instances;
  if (pool.exhaustive_max_n > 0) {
    for (int n = 1; n <= pool.exhaustive_max_n; ++n)
      for (const Graph& g : enumerate_labeled_graphs(n))
        instances.push_back(g);
  }
  for (const Graph& g : pool.extra) instances.push_back(g);
  if (pool.random_n > 0 && pool.random_count > 0) {
    SplitMix64 rng(pool.seed);
    for (int i = 0; i < pool.random_count; ++i)
      instances.push_back(random_graph(pool.random_n, pool.random_p, rng.next()));
  }

  auto hits_of = [&](std::size_t idx) {
    const Graph& g = instances[idx];
    std::vector<SearchHit> hits;
    for (const Edge& e : g.edges()) {
      long long gd = run_gamma(delete_edge(g, e), config).value;
      long long gs = run_gamma(subdivide_edge(g, e).graph, config).value;
      if (gd == gs)
        hits.push_back({g, write_graph6(g), e, gd, gs});
    }
    return hits;
  };
  auto per_instance = parallel_map<std::vector<SearchHit>>(
      instances.size(), threads, hits_of);

  std::vector<SearchHit> out;
  for (auto& hits : per_instance)
    for (auto& hit : hits) out.push_back(std::move(hit));
  return out;
}

// ---------------------------------------------------------------------------
// Report conversions
// ---------------------------------------------------------------------------

namespace {

std::string status_str(AuditStatus status) {
  return status == AuditStatus::applicable ? "applicable" : "not-applicable";
}

}  // namespace

ReportRecord to_record(const BoundAudit& audit) {
  ReportRecord r;
  r.theorem = audit.theorem;
  r.instance = audit.instance;
  r.method = audit.method;
  r.status = status_str(audit.status);
  r.reason = audit.reason;
  r.pass = audit.pass;
  r.tight_lower = audit.tight_lower;
  r.tight_upper = audit.tight_upper;
  for (const auto& [name, value] : audit.quantities)
    r.quantities.emplace_back(name, ReportValue(value));
  return r;
}

ReportRecord to_record(const CorollaryAudit& audit) {
  ReportRecord r;
  r.theorem = "corollary";
  r.instance = audit.instance;
  r.method = audit.method;
  r.status = status_str(audit.status);
  r.reason = audit.reason;
  r.pass = audit.pass;
  if (audit.status == AuditStatus::applicable) {
    r.quantities.emplace_back("alpha", ReportValue(audit.alpha));
    r.quantities.emplace_back("beta", ReportValue(audit.beta));
    r.quantities.emplace_back("lower", ReportValue(audit.lower));
    r.quantities.emplace_back("gamma", ReportValue(audit.gamma));
    r.quantities.emplace_back("upper", ReportValue(audit.upper));
  }
  return r;
}

std::vector<ReportRecord> to_records(const KSubAudit& audit) {
  std::vector<ReportRecord> out;
  auto base = [&] {
    ReportRecord r;
    r.theorem = "ksub";
    r.method = audit.method;
    r.status = status_str(audit.status);
    r.reason = audit.reason;
    r.quantities = {{"n", ReportValue(audit.n)},
                    {"m", ReportValue(audit.m)},
                    {"k", ReportValue(audit.k)},
                    {"min_degree", ReportValue(audit.min_degree)},
                    {"pendants", ReportValue(audit.pendants)}};
    return r;
  };
  if (audit.status == AuditStatus::not_applicable) {
    ReportRecord r = base();
    r.instance = audit.instance;
    r.pass = true;
    out.push_back(std::move(r));
    return out;
  }
  for (const KSubCheck& check : audit.checks) {
    ReportRecord r = base();
    r.instance = audit.instance + ";check=" + std::string(to_string(check.kind));
    r.quantities.emplace_back("solved", ReportValue(audit.solved));
    r.quantities.emplace_back("predicted", ReportValue(check.predicted));
    r.pass = check.pass;
    r.tight_upper = check.tight;
    r.tight_lower = check.kind == KSubCheck::Kind::exact && check.tight;
    out.push_back(std::move(r));
  }
  return out;
}

ReportRecord to_record(const SearchHit& hit) {
  ReportRecord r;
  r.theorem = "equal-del-sub";
  r.instance = "g6=" + hit.graph6 + ";e=" + edge_str(hit.edge);
  r.quantities = {{"gamma_deleted", ReportValue(hit.gamma_deleted)},
                  {"gamma_subdivided", ReportValue(hit.gamma_subdivided)}};
  r.pass = true;
  return r;
}

ReportRecord to_record(const SolveResult& result, std::string_view instance,
                       DominationMode mode) {
  ReportRecord r;
  r.theorem = "solve";
  r.instance = std::string(instance) + ";mode=" + std::string(to_string(mode));
  r.method = result.method;
  r.quantities = {{"gamma", ReportValue(static_cast<long long>(result.gamma))}};
  r.witness = result.witness.to_vector();
  r.nodes = result.stats.nodes;
  return r;
}

}  // namespace strongdom
