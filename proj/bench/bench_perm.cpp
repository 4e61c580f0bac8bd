// Serial reference vs OpenMP kernels on the same maps.
#include <benchmark/benchmark.h>

#include "tamesign/perm.hpp"
#include "tamesign/random.hpp"

namespace {

using namespace tamesign;

aut::PolyMap sample_map(std::uint64_t q, std::size_t n) {
  const auto field = gf::make_field_of_order(q);
  gen::Rng rng(42);
  return aut::to_polymap(gen::random_tame_word(field, n, 3, rng));
}

void BM_InducedSerial(benchmark::State& state) {
  const auto map = sample_map(static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(perm::induced_permutation_serial(map, 1u << 24));
}

void BM_InducedParallel(benchmark::State& state) {
  const auto map = sample_map(static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(perm::induced_permutation(map, 1u << 24));
}

void BM_SignByCycles(benchmark::State& state) {
  gen::Rng rng(7);
  const auto sigma = gen::random_permutation(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(perm::permutation_sign(sigma));
}

void BM_SignByInversions(benchmark::State& state) {
  gen::Rng rng(7);
  const auto sigma = gen::random_permutation(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(perm::permutation_sign_by_inversions(sigma));
}

}  // namespace

BENCHMARK(BM_InducedSerial)->Args({9, 3})->Args({16, 3})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedParallel)->Args({9, 3})->Args({16, 3})->Args({7, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignByCycles)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_SignByInversions)->Arg(1 << 12)->Arg(1 << 14);

BENCHMARK_MAIN();
