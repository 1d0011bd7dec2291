#include <benchmark/benchmark.h>

#include "quadrica/quadrica.hpp"

using namespace quadrica;

namespace {

void BM_EnumerateRankOne(benchmark::State& state) {
  const ExampleKind kind = state.range(0) == 0 ? ExampleKind::sym : ExampleKind::tensor;
  Config cfg;
  cfg.jobs = static_cast<unsigned>(state.range(1));
  const CpModule p = rank_one_pair(build_example({kind, zmod(3), 0}));
  std::size_t found = 0;
  for (auto _ : state) {
    found = enumerate_cp_quadratic(p, p, 1u << 30, cfg).size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["maps"] = static_cast<double>(found);
}
BENCHMARK(BM_EnumerateRankOne)->ArgsProduct({{0, 1}, {1, 2}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_HomModuleD4(benchmark::State& state) {
  const CpModule src = rank_one_pair(build_example({ExampleKind::rnil, zmod(4), 0}));
  const ModulePtr d4 = nil2_group_module(4, dihedral_group(4));
  const CpModule dst = certify(CpModule(d4, admissible_intermediates(*d4).front()));
  for (auto _ : state) benchmark::DoNotOptimize(hom_module(src, dst).maps.size());
}
BENCHMARK(BM_HomModuleD4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
