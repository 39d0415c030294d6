#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "deplen/analysis.hpp"

namespace deplen {

SentenceResult analyze_sentence(const DepTree& tree, std::string_view sentence_id,
                                const AnalysisConfig& config) {
  if (config.samples < 1)
    throw std::invalid_argument("samples per baseline must be at least 1");

  SentenceResult result;
  result.sentence_id = std::string(sentence_id);
  result.length = tree.size();
  result.observed = deplen(tree);
  result.baselines.reserve(config.kinds.size());

  for (BaselineKind kind : config.kinds) {
    Rng rng(derive_seed(config.seed, sentence_id, static_cast<std::uint64_t>(kind)));
    // Welford running moments.
    double mean = 0.0, m2 = 0.0;
    for (int i = 1; i <= config.samples; ++i) {
      const auto x = static_cast<double>(sample_deplen(kind, tree, rng));
      const double delta = x - mean;
      mean += delta / i;
      m2 += delta * (x - mean);
    }
    const double var = config.samples > 1 ? m2 / (config.samples - 1) : 0.0;
    result.baselines.push_back({kind, mean, std::sqrt(std::max(var, 0.0)),
                                config.samples});
  }
  return result;
}

void sort_by_id(std::vector<SentenceResult>& results) {
  std::stable_sort(results.begin(), results.end(),
                   [](const SentenceResult& a, const SentenceResult& b) {
                     return a.sentence_id < b.sentence_id;
                   });
}

}  // namespace deplen
