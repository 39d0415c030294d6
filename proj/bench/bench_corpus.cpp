// Serial reference vs OpenMP corpus analysis on the bundled treebank.
//
//   ./bench_corpus --benchmark_counters_tabular=true
//   OMP_NUM_THREADS=8 ./bench_corpus

#include <benchmark/benchmark.h>
#include <omp.h>

#include <fstream>

#include "deplen/analysis.hpp"

namespace {

const std::vector<deplen::Sentence>& corpus() {
  static const auto sentences = [] {
    std::ifstream in(std::string(DEPLEN_CORPUS_DIR) + "/cs_pud-gold.conllu");
    deplen::IngestReport report;
    return deplen::load_conllu(in, "cs_pud", {.exclude_punct = true}, report);
  }();
  return sentences;
}

deplen::AnalysisConfig config(int samples) {
  deplen::AnalysisConfig cfg;
  cfg.samples = samples;
  return cfg;
}

void BM_CorpusSerial(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deplen::analyze_corpus_serial(corpus(), cfg));
  state.SetItemsProcessed(state.iterations() * corpus().size());
}

void BM_CorpusOpenMP(benchmark::State& state) {
  const auto cfg = config(static_cast<int>(state.range(0)));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(deplen::analyze_corpus(corpus(), cfg));
  state.SetItemsProcessed(state.iterations() * corpus().size());
  state.counters["threads"] = static_cast<double>(state.range(1));
}

void thread_counts(benchmark::internal::Benchmark* b) {
  for (int samples : {10, 100})
    for (int t = 1; t <= omp_get_num_procs(); t *= 2) b->Args({samples, t});
}

BENCHMARK(BM_CorpusSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorpusOpenMP)->Apply(thread_counts)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
