#include <benchmark/benchmark.h>

#include "hfk/hc.hpp"

namespace {

void BM_ConnsumSearch(benchmark::State& state) {
  const hfk::LensSpace first(5, 1);
  const hfk::LensSpace second(7, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::connsum_search(first, second, state.range(0)));
  }
}
BENCHMARK(BM_ConnsumSearch)->DenseRange(0, 2);

void BM_CyclotomicScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::cyclotomic_exception_scan(state.range(0)));
  }
}
BENCHMARK(BM_CyclotomicScan)->Arg(500)->Arg(5000);

}  // namespace
