#include <benchmark/benchmark.h>

#include "aci/koszul_aci.hpp"
#include "aci/resolution.hpp"

namespace {

void family_resolution(benchmark::State& state, aci::FamilyCase shape) {
  const int g = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    aci::Ideal I = aci::generate_family(shape, g, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(aci::summarize_resolution(I).betti.entries().size());
  }
}

void BM_FamilyOneResolution(benchmark::State& state) { family_resolution(state, aci::FamilyCase::one); }
BENCHMARK(BM_FamilyOneResolution)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_FamilyTwoResolution(benchmark::State& state) { family_resolution(state, aci::FamilyCase::two); }
BENCHMARK(BM_FamilyTwoResolution)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ClassifyAndLift(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    aci::Ideal I = aci::generate_family(seed % 2 ? aci::FamilyCase::two : aci::FamilyCase::one, g, seed);
    ++seed;
    state.ResumeTiming();
    auto c = aci::classify(I);
    benchmark::DoNotOptimize(aci::verify_lift(aci::lg_lift(c)).ok());
  }
}
BENCHMARK(BM_ClassifyAndLift)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_RandomAciBeta23(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    aci::Ideal I = aci::random_quadratic_aci(g, seed++);
    benchmark::DoNotOptimize(aci::beta23(I.gens()));
  }
}
BENCHMARK(BM_RandomAciBeta23)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
