#include <benchmark/benchmark.h>

#include "exlab/bounds.hpp"
#include "exlab/cliques.hpp"
#include "exlab/complex.hpp"
#include "exlab/scenarios.hpp"

namespace {

using namespace exlab;

void BM_EBoundPentagon(benchmark::State& state) {
  const auto c = pentagon();
  for (auto _ : state) benchmark::DoNotOptimize(e_bound(c));
}
BENCHMARK(BM_EBoundPentagon);

void BM_EBoundCycle(benchmark::State& state) {
  const auto c = cycle_complex(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(e_bound(c));
}
BENCHMARK(BM_EBoundCycle)->Arg(5)->Arg(9)->Arg(15)->Arg(25);

void BM_ProductCliqueComplexBound(benchmark::State& state) {
  const auto joint = clique_complex(or_product(pentagon(), pentagon()));
  for (auto _ : state) benchmark::DoNotOptimize(e_bound(joint));
}
BENCHMARK(BM_ProductCliqueComplexBound)->Unit(benchmark::kMillisecond);

void BM_CeProductBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ce_product_bound(pentagon(), 2));
}
BENCHMARK(BM_CeProductBound)->Unit(benchmark::kMillisecond);

void BM_NchvBound(benchmark::State& state) {
  const auto c = or_product(pentagon(), pentagon());
  for (auto _ : state) benchmark::DoNotOptimize(nchv_bound(c));
}
BENCHMARK(BM_NchvBound);

void BM_DisjointCliques(benchmark::State& state) {
  const auto c = or_product(pentagon(), pentagon());
  for (auto _ : state) benchmark::DoNotOptimize(find_disjoint_cliques(c, 5, 5));
}
BENCHMARK(BM_DisjointCliques);

void BM_TwoPrBoxMaximalCliques(benchmark::State& state) {
  const Behavior pr = pr_box_behavior();
  const auto c = lo_complex(product_behavior(pr, pr), Support::nonzero);
  const Graph g = skeleton(c);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
  state.counters["cliques"] = static_cast<double>(maximal_cliques(g).size());
}
BENCHMARK(BM_TwoPrBoxMaximalCliques)->Unit(benchmark::kMillisecond);

void BM_TwoPrBoxViolation(benchmark::State& state) {
  const Behavior pr = pr_box_behavior();
  const Behavior pair = product_behavior(pr, pr);
  const auto c = lo_complex(pair, Support::nonzero);
  const Assignment p = assignment_from_behavior(c, pair);
  for (auto _ : state) benchmark::DoNotOptimize(find_ce_violation(c, p));
}
BENCHMARK(BM_TwoPrBoxViolation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
