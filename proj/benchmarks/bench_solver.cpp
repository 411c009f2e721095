#include <benchmark/benchmark.h>

#include "tverberg/tverberg.hpp"

using namespace tverberg;

namespace {

void BM_SolveOdd(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const PointSet s = generate(GenKind::Uniform, m, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(solve_odd(s, 0));
  }
}
BENCHMARK(BM_SolveOdd)->Arg(5)->Arg(9)->Arg(21)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_SolveEvenPath(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const PointSet s = generate(GenKind::Uniform, m, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(solve_even_path(s, 0));
  }
}
BENCHMARK(BM_SolveEvenPath)->Arg(4)->Arg(8)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ConvexCycle(benchmark::State& state) {
  const PointSet s = generate(GenKind::Convex, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(convex_position_cycle(s));
}
BENCHMARK(BM_ConvexCycle)->Arg(9)->Arg(99)->Unit(benchmark::kMicrosecond);

void BM_DisksCommonPoint(benchmark::State& state) {
  const PointSet s = generate(GenKind::Uniform, static_cast<std::size_t>(state.range(0)), 2);
  const SolveResult r = solve_odd(s, 0);
  std::vector<Ball> balls;
  for (const Edge& e : r.graph.edges()) balls.push_back(diametral_ball(s[e.u], s[e.v]));
  for (auto _ : state) benchmark::DoNotOptimize(disks_common_point(balls));
}
BENCHMARK(BM_DisksCommonPoint)->Arg(9)->Arg(21)->Arg(51)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State& state) {
  const PointSet s = generate(GenKind::Uniform, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hamiltonian(s, EnumerationMode::Cycles));
}
BENCHMARK(BM_Enumerate)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_Theorem3(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::size_t m = d == 2 ? 7 : 9;
  GenOptions opts;
  opts.dim = d;
  const PointSet s = generate(GenKind::Uniform, m, 4, opts);
  for (auto _ : state) benchmark::DoNotOptimize(theorem3_graph(s, max_tverberg_r(m, d)));
}
BENCHMARK(BM_Theorem3)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LensSearch(benchmark::State& state) {
  const PointSet s = generate(GenKind::Convex, 7, 5);
  const SolveResult r = convex_position_cycle(s);
  for (auto _ : state) benchmark::DoNotOptimize(lens_family_search(s, r.graph, kConvexLensAlpha));
}
BENCHMARK(BM_LensSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
