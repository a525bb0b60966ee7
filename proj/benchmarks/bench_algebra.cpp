#include <benchmark/benchmark.h>

#include "aci/edge_ideals.hpp"
#include "aci/groebner.hpp"
#include "aci/parser.hpp"
#include "aci/resolution.hpp"

namespace {

aci::Ideal example() {
  auto doc = aci::parse_document(
      "ring F32003[x,y,z,w];\n"
      "ideal (x*y, x*w, z^2, (x-y)*z, x^2+z*w);\n");
  return *doc.ideal;
}

void BM_GroebnerExample(benchmark::State& state) {
  aci::Ideal I = example();
  for (auto _ : state) benchmark::DoNotOptimize(aci::buchberger(I).size());
}
BENCHMARK(BM_GroebnerExample);

void BM_MinimalResolutionExample(benchmark::State& state) {
  aci::Ideal I = example();
  for (auto _ : state) benchmark::DoNotOptimize(aci::minimal_free_resolution(I).length());
}
BENCHMARK(BM_MinimalResolutionExample)->Unit(benchmark::kMicrosecond);

void BM_BettiByRanks(benchmark::State& state) {
  aci::Ideal I = example();
  for (auto _ : state) benchmark::DoNotOptimize(aci::betti_table(I).entries().size());
}
BENCHMARK(BM_BettiByRanks)->Unit(benchmark::kMicrosecond);

void BM_EnumerateGraphs(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aci::enumerate_graphs(g).size());
}
BENCHMARK(BM_EnumerateGraphs)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Catalog(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aci::build_catalog(g).entries.size());
}
BENCHMARK(BM_Catalog)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
