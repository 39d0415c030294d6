#include <algorithm>
#include <map>

#include "deplen/analysis.hpp"

namespace deplen {

namespace {

const BaselineStats* find_stats(const SentenceResult& r, BaselineKind kind) {
  for (const auto& b : r.baselines)
    if (b.kind == kind) return &b;
  return nullptr;
}

}  // namespace

std::vector<ComparisonRow> aggregate(std::span<const SentenceResult> results,
                                     std::size_t min_bin) {
  std::vector<ComparisonRow> rows;
  if (results.empty()) return rows;

  std::vector<BaselineKind> kinds;
  for (const auto& b : results.front().baselines) kinds.push_back(b.kind);

  std::map<int, std::vector<const SentenceResult*>> bins;
  for (const auto& r : results) bins[r.length].push_back(&r);

  for (const auto& [length, members] : bins) {
    if (members.size() < min_bin) continue;
    const double count = static_cast<double>(members.size());

    double observed = 0.0;
    for (const auto* r : members) observed += static_cast<double>(r->observed);
    rows.push_back({length, std::string(kAttestedSeries), observed / count,
                    members.size()});

    for (BaselineKind kind : kinds) {
      double sum = 0.0;
      std::size_t present = 0;
      for (const auto* r : members) {
        if (const auto* s = find_stats(*r, kind)) {
          sum += s->mean;
          ++present;
        }
      }
      if (present < min_bin || present == 0) continue;
      rows.push_back({length, std::string(to_string(kind)),
                      sum / static_cast<double>(present), present});
    }
  }
  return rows;
}

std::vector<BaselineSummary> summarize(std::span<const SentenceResult> results) {
  std::vector<BaselineSummary> out;
  if (results.empty()) return out;

  for (const auto& first : results.front().baselines) {
    BaselineSummary s{first.kind};
    double observed = 0.0, baseline = 0.0;
    std::size_t below = 0;
    for (const auto& r : results) {
      const auto* stats = find_stats(r, first.kind);
      if (!stats) continue;
      ++s.n_sentences;
      observed += static_cast<double>(r.observed);
      baseline += stats->mean;
      if (static_cast<double>(r.observed) < stats->mean) ++below;
    }
    if (s.n_sentences > 0) {
      const double count = static_cast<double>(s.n_sentences);
      s.observed_mean = observed / count;
      s.baseline_mean = baseline / count;
      s.fraction_below = static_cast<double>(below) / count;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace deplen
