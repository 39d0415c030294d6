#include <exception>
#include <stdexcept>

#include "deplen/analysis.hpp"

namespace deplen {

std::vector<SentenceResult> analyze_corpus(std::span<const Sentence> corpus,
                                           const AnalysisConfig& config) {
  if (config.samples < 1)
    throw std::invalid_argument("samples per baseline must be at least 1");

  const auto n = static_cast<std::int64_t>(corpus.size());
  std::vector<SentenceResult> results(corpus.size());
  std::exception_ptr failure;

  // Sentence lengths vary a lot, so hand out work dynamically. Each slot is
  // written by exactly one thread.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      results[i] = analyze_sentence(corpus[i].tree, corpus[i].id, config);
    } catch (...) {
#pragma omp critical(deplen_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  sort_by_id(results);
  return results;
}

}  // namespace deplen
