#include <benchmark/benchmark.h>

#include "brt/treepair.hpp"

namespace {

void BM_ComposeRotations(benchmark::State& state) {
  const brt::Params p(state.range(0), 3);
  const brt::TreePairElement a = brt::rotation_element(p, brt::hbar(p));
  const brt::TreePairElement b = brt::rotation_element(p, 1);
  const brt::TreePairElement g = brt::compose(brt::power(a, 3), b);
  for (auto _ : state) benchmark::DoNotOptimize(brt::compose(g, g));
}
BENCHMARK(BM_ComposeRotations)->Arg(2)->Arg(3)->Arg(5);

void BM_VerifyThompson(benchmark::State& state) {
  const brt::Params p(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brt::verify_T_presentation(p));
}
BENCHMARK(BM_VerifyThompson)->Args({2, 2})->Args({5, 5});

}  // namespace
