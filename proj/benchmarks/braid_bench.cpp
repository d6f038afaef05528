#include <random>

#include <benchmark/benchmark.h>

#include "brt/braid.hpp"

namespace {

brt::ArtinWord random_word(int strands, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
  std::vector<int> letters(length);
  for (int& x : letters) x = gen(rng) * (sign(rng) ? 1 : -1);
  return brt::ArtinWord(strands, std::move(letters));
}

void BM_GarsideNormalForm(benchmark::State& state) {
  const brt::ArtinWord w = random_word(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(brt::garside_nf(w));
}
BENCHMARK(BM_GarsideNormalForm)->Args({4, 16})->Args({6, 64})->Args({6, 256})->Args({12, 128});

void BM_VerifyBraidRelators(benchmark::State& state) {
  const brt::Params p(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(brt::verify_braid_relators(p));
}
BENCHMARK(BM_VerifyBraidRelators);

}  // namespace
