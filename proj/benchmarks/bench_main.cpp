// Microbenchmarks for the geometric kernels, parametrized by vertex count
// where the cost depends on it.

#include <benchmark/benchmark.h>

#include "cheeger2d/asymmetry.hpp"
#include "cheeger2d/cheeger.hpp"
#include "cheeger2d/families.hpp"
#include "cheeger2d/hausdorff.hpp"
#include "cheeger2d/inner_parallel.hpp"

namespace {

using namespace cheeger2d;

void BM_MinimalWidth(benchmark::State& state) {
  auto poly = regular_ngon(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly.minimal_width().width);
  }
}
BENCHMARK(BM_MinimalWidth)->Arg(8)->Arg(64)->Arg(512);

void BM_InnerParallel(benchmark::State& state) {
  auto poly = regular_ngon(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inner_parallel(poly, 0.2));
  }
}
BENCHMARK(BM_InnerParallel)->Arg(8)->Arg(64)->Arg(512);

void BM_Cheeger_Equilateral(benchmark::State& state) {
  auto tri = make_equilateral({1.0, {0, 0}, 0.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheeger(tri).h);
  }
}
BENCHMARK(BM_Cheeger_Equilateral);

void BM_Cheeger_Ngon(benchmark::State& state) {
  auto poly = regular_ngon(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheeger(poly).h);
  }
}
BENCHMARK(BM_Cheeger_Ngon)->Arg(8)->Arg(64)->Arg(256);

void BM_Hausdorff(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto p = regular_ngon(n, 1.0);
  auto q = regular_ngon(n, 1.1).rotated(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hausdorff_distance(p, q));
  }
}
BENCHMARK(BM_Hausdorff)->Arg(8)->Arg(64)->Arg(512);

void BM_Asymmetry_Square(benchmark::State& state) {
  auto sq = rect_RL(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(asymmetry(sq).value);
  }
}
BENCHMARK(BM_Asymmetry_Square);

}  // namespace

BENCHMARK_MAIN();
