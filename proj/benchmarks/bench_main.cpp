#include <benchmark/benchmark.h>

#include "ccr/heisenberg.hpp"
#include "ccr/pathint.hpp"
#include "ccr/propagator.hpp"
#include "ccr/random.hpp"

namespace {

using namespace ccr;

void BM_NormalOrder(benchmark::State& state) {
  RandomAlgebra rnd(3);
  std::vector<OpExpr> exprs;
  for (int i = 0; i < 64; ++i) exprs.push_back(rnd.expr(6, static_cast<unsigned>(state.range(0))));
  for (auto _ : state)
    for (const auto& e : exprs) benchmark::DoNotOptimize(normal_order(e));
}
BENCHMARK(BM_NormalOrder)->Arg(4)->Arg(8)->Arg(12);

void BM_TaylorFlowHarmonic(benchmark::State& state) {
  const Generator g = generator(harmonic_force(), newtonian_velocity());
  for (auto _ : state) benchmark::DoNotOptimize(taylor_flow(OpExpr::x(), g, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_TaylorFlowHarmonic)->Arg(8)->Arg(16);

void BM_EvolveExact(benchmark::State& state) {
  const Grid g = Grid::span(-10, 10, static_cast<std::size_t>(state.range(0)));
  const auto psi = gaussian_packet(g, 0.5, 0.2, 1.0);
  const auto k = gaussian_kernel(AffineFlowExact::harmonic(1.0, 1.0), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_exact(k, psi));
}
BENCHMARK(BM_EvolveExact)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_ShortTimeMatrix(benchmark::State& state) {
  const Grid g = Grid::span(-6, 6, static_cast<std::size_t>(state.range(0)));
  const RealPolynomial force{{0.0, -1.0}};
  for (auto _ : state) benchmark::DoNotOptimize(short_time_matrix(force, 1.0, 0.5, g));
}
BENCHMARK(BM_ShortTimeMatrix)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Propagate(benchmark::State& state) {
  const Grid g = Grid::span(-6, 6, 1024);
  const auto k = short_time_matrix(RealPolynomial{{0.0, -1.0}}, 1.0, 0.5, g);
  const auto psi = gaussian_packet(g, 0.5, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(propagate(k, psi, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Propagate)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
