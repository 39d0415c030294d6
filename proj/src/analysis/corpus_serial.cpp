#include "deplen/analysis.hpp"

namespace deplen {

std::vector<SentenceResult> analyze_corpus_serial(std::span<const Sentence> corpus,
                                                  const AnalysisConfig& config) {
  std::vector<SentenceResult> results;
  results.reserve(corpus.size());
  for (const Sentence& s : corpus)
    results.push_back(analyze_sentence(s.tree, s.id, config));
  sort_by_id(results);
  return results;
}

}  // namespace deplen
