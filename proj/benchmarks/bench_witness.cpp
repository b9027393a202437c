#include <benchmark/benchmark.h>

#include "hfk/primes.hpp"
#include "hfk/witness.hpp"

namespace {

void BM_FindPrimeWitness(benchmark::State& state) {
  const hfk::Int n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::find_prime_witness(1, n));
  }
}
BENCHMARK(BM_FindPrimeWitness)->Arg(7)->Arg(101)->Arg(997)->Arg(100003);

void BM_ConstructWitness(benchmark::State& state) {
  const hfk::LensSpace space(state.range(0), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::construct_witness(space));
  }
}
BENCHMARK(BM_ConstructWitness)->Arg(7)->Arg(101)->Arg(997)->Arg(100003);

void BM_ConstructWitnessBig(benchmark::State& state) {
  const hfk::LensSpace space(hfk::Int("1000000000000000000000000000057"), 12345);
  hfk::WitnessOptions options;
  options.prime_bound = space.p() * 100000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::construct_witness(space, options));
  }
}
BENCHMARK(BM_ConstructWitnessBig);

void BM_BruteSearch(benchmark::State& state) {
  const hfk::LensSpace space(29, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::brute_search(space, state.range(0)));
  }
}
BENCHMARK(BM_BruteSearch)->DenseRange(1, 4);

}  // namespace
