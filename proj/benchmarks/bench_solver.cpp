#include <benchmark/benchmark.h>

#include "strongdom/audits.hpp"
#include "strongdom/families.hpp"
#include "strongdom/io.hpp"
#include "strongdom/solver.hpp"
#include "strongdom/transforms.hpp"

using namespace strongdom;

namespace {

void BM_bnb_cycle(benchmark::State& state) {
  Graph g = make_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = gamma_bnb(g, DominationMode::strong);
    benchmark::DoNotOptimize(result.gamma);
  }
}
BENCHMARK(BM_bnb_cycle)->Arg(9)->Arg(15)->Arg(21)->Arg(30);

void BM_bnb_random(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 12345);
  for (auto _ : state) {
    auto result = gamma_bnb(g, DominationMode::strong);
    benchmark::DoNotOptimize(result.gamma);
  }
}
BENCHMARK(BM_bnb_random)->Arg(8)->Arg(12)->Arg(16);

void BM_bnb_ksub_k4(benchmark::State& state) {
  Graph g =
      k_subdivision(make_complete(4), static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    auto result = gamma_bnb(g, DominationMode::strong);
    benchmark::DoNotOptimize(result.gamma);
  }
}
BENCHMARK(BM_bnb_ksub_k4)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_oracle(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 777);
  for (auto _ : state) {
    auto result = gamma_oracle(g, DominationMode::strong);
    benchmark::DoNotOptimize(result.gamma);
  }
}
BENCHMARK(BM_oracle)->Arg(8)->Arg(10)->Arg(12);

void BM_tree_dp(benchmark::State& state) {
  Graph t = random_tree(static_cast<int>(state.range(0)), 31337);
  for (auto _ : state) {
    auto result = gamma_tree_dp(t);
    benchmark::DoNotOptimize(result.gamma);
  }
}
BENCHMARK(BM_tree_dp)->Range(64, 4096);

void BM_audit_edge_deletion(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 99);
  Edge e = g.edges().front();
  for (auto _ : state) {
    auto audit = audit_edge_deletion(g, e);
    benchmark::DoNotOptimize(audit.pass);
  }
}
BENCHMARK(BM_audit_edge_deletion)->Arg(6)->Arg(10)->Arg(14);

void BM_graph6_round_trip(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 4242);
  for (auto _ : state) {
    Graph back = parse_graph6(write_graph6(g));
    benchmark::DoNotOptimize(back.edge_count());
  }
}
BENCHMARK(BM_graph6_round_trip)->Arg(16)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
