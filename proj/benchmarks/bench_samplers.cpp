#include <benchmark/benchmark.h>

#include "cosetlab/bruhat.hpp"
#include "cosetlab/ctab.hpp"
#include "cosetlab/hyperoct.hpp"
#include "cosetlab/mallows.hpp"

using namespace cosetlab;

static void BM_MallowsSample(benchmark::State& state) {
  const MallowsModel model(static_cast<int>(state.range(0)), 2);
  Rng rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(mallows_sample(model, rng));
}
BENCHMARK(BM_MallowsSample)->Arg(20)->Arg(100)->Arg(200);

static void BM_BruhatDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const FqMatrix m = sample_uniform_rejection(n, 5, rng).matrix;
  for (auto _ : state)
    benchmark::DoNotOptimize(bruhat_decompose(m));
}
BENCHMARK(BM_BruhatDecompose)->Arg(8)->Arg(16)->Arg(32);

static void BM_GlSamplePak(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_uniform_pak(n, 3, rng));
}
BENCHMARK(BM_GlSamplePak)->Arg(8)->Arg(16)->Arg(32);

static void BM_GlSampleRejection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_uniform_rejection(n, 3, rng));
}
BENCHMARK(BM_GlSampleRejection)->Arg(8)->Arg(16)->Arg(32);

static void BM_EwensSample(benchmark::State& state) {
  const EwensModel model(static_cast<int>(state.range(0)), Rational(1, 2));
  Rng rng(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(ewens_sample(model, rng));
}
BENCHMARK(BM_EwensSample)->Arg(50)->Arg(200);

static void BM_FySample(benchmark::State& state) {
  const long long r = state.range(0);
  const MarginSpec margins(
      Partition(std::vector<long long>(10, r)),
      Partition(std::vector<long long>(10, r)));
  Rng rng(6);
  for (auto _ : state)
    benchmark::DoNotOptimize(fy_sample(margins, rng));
}
BENCHMARK(BM_FySample)->Arg(10)->Arg(100);

static void BM_CosetPartition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  std::vector<int> word(static_cast<std::size_t>(2 * n));
  std::iota(word.begin(), word.end(), 1);
  std::shuffle(word.begin(), word.end(), rng);
  const Permutation sigma(word);
  for (auto _ : state)
    benchmark::DoNotOptimize(coset_partition(sigma));
}
BENCHMARK(BM_CosetPartition)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
