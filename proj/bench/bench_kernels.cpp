#include <benchmark/benchmark.h>

#include <random>

#include "lexicov/kernels.h"
#include "lexicov/pipeline.h"

using namespace lexicov;

namespace {

const std::vector<std::string>& words() {
  static const std::vector<std::string> w = [] {
    std::mt19937_64 rng(1);
    std::vector<std::string> vocab;
    std::uniform_int_distribution<int> len(3, 10), letter(0, 25);
    for (int i = 0; i < 20000; ++i) {
      std::string s;
      for (int k = 0, l = len(rng); k < l; ++k) s += static_cast<char>('a' + letter(rng));
      vocab.push_back(s);
    }
    std::vector<double> weights;
    for (std::size_t i = 0; i < vocab.size(); ++i) weights.push_back(1.0 / (i + 1.0));
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::vector<std::string> out;
    for (int i = 0; i < 2'000'000; ++i) out.push_back(vocab[pick(rng)]);
    return out;
  }();
  return w;
}

void BM_CountSerial(benchmark::State& state) {
  words();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_serial(words()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words().size()));
}
BENCHMARK(BM_CountSerial)->Unit(benchmark::kMillisecond);

void BM_CountParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_parallel(words(), jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words().size()));
}
BENCHMARK(BM_CountParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RankAndCutoff(benchmark::State& state) {
  FrequencyTable table(kernels::count_serial(words()));
  for (auto _ : state) {
    RankedList r = rank(table);
    benchmark::DoNotOptimize(cutoff(r, Fraction(95, 100)));
  }
}
BENCHMARK(BM_RankAndCutoff)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
