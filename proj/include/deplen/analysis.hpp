// Monte Carlo comparison of attested dependency length against baselines.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "deplen/baselines.hpp"
#include "deplen/conllu.hpp"

namespace deplen {

inline constexpr int kDefaultSamples = 100;
inline constexpr std::size_t kDefaultMinBin = 3;

struct BaselineStats {
  BaselineKind kind{};
  double mean = 0.0;
  double stddev = 0.0;  // unbiased; 0 when samples == 1
  std::int64_t samples = 0;

  bool operator==(const BaselineStats&) const = default;
};

struct SentenceResult {
  std::string sentence_id;
  int length = 0;
  std::int64_t observed = 0;
  std::vector<BaselineStats> baselines;  // in requested order

  bool operator==(const SentenceResult&) const = default;
};

struct AnalysisConfig {
  std::vector<BaselineKind> kinds{kAllBaselines.begin(), kAllBaselines.end()};
  int samples = kDefaultSamples;
  std::uint64_t seed = 0;
};

/// Observed deplen plus `config.samples` draws per baseline. Each baseline
/// gets its own generator seeded from (seed, sentence id, kind), so results
/// do not depend on corpus order or on which other baselines run.
/// Throws std::invalid_argument if samples < 1.
SentenceResult analyze_sentence(const DepTree& tree, std::string_view sentence_id,
                                const AnalysisConfig& config);

/// Reference corpus loop: one sentence after another. Output is sorted by
/// sentence id (ties keep input order).
std::vector<SentenceResult> analyze_corpus_serial(std::span<const Sentence> corpus,
                                                  const AnalysisConfig& config);

/// OpenMP version of analyze_corpus_serial; identical output.
std::vector<SentenceResult> analyze_corpus(std::span<const Sentence> corpus,
                                           const AnalysisConfig& config);

/// Sorts results by sentence id, stable.
void sort_by_id(std::vector<SentenceResult>& results);

inline constexpr std::string_view kAttestedSeries = "attested";

struct ComparisonRow {
  int length = 0;
  std::string series;  // "attested" or a baseline name
  double mean_deplen = 0.0;
  std::size_t n_sentences = 0;

  bool operator==(const ComparisonRow&) const = default;
};

/// Per exact sentence length: mean observed deplen and mean of per-sentence
/// baseline means. Lengths with fewer than `min_bin` sentences are dropped.
/// Rows come out by length, attested first, then baselines in the order of
/// the first result.
std::vector<ComparisonRow> aggregate(std::span<const SentenceResult> results,
                                     std::size_t min_bin = kDefaultMinBin);

struct BaselineSummary {
  BaselineKind kind{};
  std::size_t n_sentences = 0;
  double observed_mean = 0.0;
  double baseline_mean = 0.0;
  double fraction_below = 0.0;  // share of sentences with observed < baseline mean
};

std::vector<BaselineSummary> summarize(std::span<const SentenceResult> results);

/// `sentence_id,length,observed,baseline,mean,stddev,samples`
void write_results_csv(std::ostream& out, std::span<const SentenceResult> results);

/// `length,series,mean_deplen,n_sentences`
void write_plot_csv(std::ostream& out, std::span<const ComparisonRow> rows);

/// Human-readable summary table.
void print_summary(std::ostream& out, std::span<const BaselineSummary> summary);

/// Fixed-point rendering with 4 decimals, independent of locale.
std::string format_fixed4(double value);

}  // namespace deplen
