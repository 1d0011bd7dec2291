#include <benchmark/benchmark.h>

#include "quadrica/quadrica.hpp"

using namespace quadrica;

namespace {

constexpr ExampleKind kKinds[] = {ExampleKind::classical, ExampleKind::rnil, ExampleKind::lambda,
                                  ExampleKind::tensor,    ExampleKind::sym,  ExampleKind::gamma};

// Certifying the example square ring over Z/n; state.range(0) picks the family.
void BM_VerifySquareRing(benchmark::State& state) {
  const ExampleKind kind = kKinds[state.range(0)];
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const RingPtr ring = build_example({kind, zmod(n), 0});
  const SquareRing raw(ring->parts());
  for (auto _ : state) benchmark::DoNotOptimize(verify_square_ring(raw).passed());
  state.SetLabel(ring->label());
}
BENCHMARK(BM_VerifySquareRing)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {2, 3, 4}});

void BM_VerifyRegularModule(benchmark::State& state) {
  const RingPtr ring = build_example({kKinds[state.range(0)], zmod(4), 0});
  const ModulePtr re = regular_module(ring);
  const BhpModule raw(re->parts());
  for (auto _ : state) benchmark::DoNotOptimize(verify_bhp_module(raw).passed());
  state.SetLabel(ring->label());
}
BENCHMARK(BM_VerifyRegularModule)->DenseRange(0, 5);

void BM_BhpQuadraticHopf(benchmark::State& state) {
  const RingPtr ring = build_example({ExampleKind::rnil, zmod(static_cast<std::size_t>(state.range(0))), 0});
  const MapTable h = make_map(regular_module(ring), ree_module(ring), ring->parts().hopf);
  for (auto _ : state) benchmark::DoNotOptimize(is_bhp_quadratic(h).quadratic());
}
BENCHMARK(BM_BhpQuadraticHopf)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
