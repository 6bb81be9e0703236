#include <benchmark/benchmark.h>

#include "fairfan/arrangement.hpp"
#include "fairfan/fan.hpp"
#include "fairfan/hamsandwich.hpp"
#include "fairfan/instances.hpp"

using namespace fairfan;

namespace {

void BM_orientation(benchmark::State& state) {
  Rng rng(1);
  std::vector<std::vector<Point>> batches;
  for (int i = 0; i < 64; ++i) {
    std::vector<Point> pts;
    for (int j = 0; j < 4; ++j)
      pts.push_back(Point{Rat(rng.range(-1000, 1000)), Rat(rng.range(-1000, 1000)),
                          Rat(rng.range(-1000, 1000))});
    batches.push_back(pts);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orientation(batches[i++ % batches.size()]));
  }
}
BENCHMARK(BM_orientation);

void BM_ham_sandwich_cut(benchmark::State& state) {
  MeasureFamily fam = gen_random_family(2, 2, 5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ham_sandwich_cut(fam.measures[0], fam.measures[1]));
  }
}
BENCHMARK(BM_ham_sandwich_cut)->Arg(32)->Arg(128)->Arg(512);

void BM_equipartition(benchmark::State& state) {
  MeasureFamily fam = gen_random_family(2, 2, 6, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        equipartition_2pow(fam.measures[0], fam.measures[1], static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_equipartition)->Arg(1)->Arg(2)->Arg(3);

void BM_build_fan(benchmark::State& state) {
  const int n = 5, c = 4, d = 2;
  MeasureFamily fam = gen_random_family(d, n * (c - d) + d, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fan(fam, n, c));
  }
}
BENCHMARK(BM_build_fan);

void BM_arrangement_stats(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrangement_stats(m, 3, m - 1, ArrangementVariant::one_measure));
  }
}
BENCHMARK(BM_arrangement_stats)->Arg(5)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
