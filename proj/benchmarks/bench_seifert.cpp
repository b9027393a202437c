#include <benchmark/benchmark.h>

#include "hfk/seifert.hpp"

namespace {

void BM_AlexanderGenusOne(benchmark::State& state) {
  const hfk::LensSpace space(7, 1);
  const auto s = hfk::seifert_matrix_lens(space, {10, 13, 11, 1, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::alexander(s, 7));
  }
}
BENCHMARK(BM_AlexanderGenusOne);

void BM_AlexanderGenusTwo(benchmark::State& state) {
  hfk::RationalMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      m(i, j) = hfk::Rational(static_cast<long>(i + 2 * j) - 3, 3);
      m(j, i) = m(i, j);
    }
  }
  m(1, 0) += 1;
  m(3, 2) += 1;
  const hfk::SeifertMatrix s(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hfk::alexander(s, 81));
  }
}
BENCHMARK(BM_AlexanderGenusTwo);

}  // namespace
