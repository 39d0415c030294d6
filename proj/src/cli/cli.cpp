#include "deplen/cli.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "deplen/analysis.hpp"
#include "deplen/conllu.hpp"
#include "deplen/projective.hpp"

namespace deplen::cli {

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string baselines = "random-tree,free,projective,head-fixed";
  int samples = kDefaultSamples;
  std::uint64_t seed = 0;
  bool exclude_punct = false;
  int min_len = 1;
  std::optional<int> max_len;
  std::size_t min_bin = kDefaultMinBin;
  std::string results_out = "results.csv";
  std::string plot_out = "plot.csv";
};

struct OracleConfig {
  std::vector<std::string> inputs;
  int cap = kDefaultEnumerationCap;
  bool exclude_punct = false;
};

std::vector<BaselineKind> parse_baseline_list(const std::string& spec) {
  std::vector<BaselineKind> kinds;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const auto kind = parse_baseline(name);
    if (!kind) throw UsageError("unknown baseline '" + name + "'");
    if (std::find(kinds.begin(), kinds.end(), *kind) == kinds.end())
      kinds.push_back(*kind);
  }
  if (kinds.empty()) throw UsageError("--baselines must name at least one baseline");
  return kinds;
}

std::vector<Sentence> load_inputs(const std::vector<std::string>& paths,
                                  bool exclude_punct, IngestReport& report) {
  LoadOptions options;
  options.exclude_punct = exclude_punct;
  options.namespace_ids = paths.size() > 1;
  std::vector<Sentence> corpus;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read " + path);
    auto part = load_conllu(in, path, options, report);
    if (in.bad()) throw DataError("read error on " + path);
    corpus.insert(corpus.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return corpus;
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DataError("cannot write " + path);
  writer(file);
  file.flush();
  if (!file) throw DataError("write failed on " + path);
}

void print_ingest(std::ostream& out, const IngestReport& r) {
  out << "sentences parsed:        " << r.parsed << '\n'
      << "sentences skipped:       " << r.skipped_invalid << '\n'
      << "punctuation dropped:     " << r.punct_dropped << '\n'
      << "non-leaf punct kept:     " << r.nonleaf_punct_kept << '\n';
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  if (cfg.min_len < 1) throw UsageError("--min-len must be at least 1");
  if (cfg.max_len && *cfg.max_len < cfg.min_len)
    throw UsageError("--min-len exceeds --max-len");

  AnalysisConfig analysis;
  analysis.kinds = parse_baseline_list(cfg.baselines);
  analysis.samples = cfg.samples;
  analysis.seed = cfg.seed;

  IngestReport report;
  auto corpus = load_inputs(cfg.inputs, cfg.exclude_punct, report);
  const auto loaded = corpus.size();
  std::erase_if(corpus, [&](const Sentence& s) {
    return s.tree.size() < cfg.min_len || (cfg.max_len && s.tree.size() > *cfg.max_len);
  });

  print_ingest(out, report);
  out << "outside length filter:   " << loaded - corpus.size() << '\n';
  if (corpus.empty()) throw DataError("no valid sentences to analyze");

  const auto results = analyze_corpus(corpus, analysis);
  const auto rows = aggregate(results, cfg.min_bin);
  write_file(cfg.results_out, [&](std::ostream& f) { write_results_csv(f, results); });
  write_file(cfg.plot_out, [&](std::ostream& f) { write_plot_csv(f, rows); });

  out << '\n';
  print_summary(out, summarize(results));
  out << "OK " << results.size() << " sentences\n";
  return kOk;
}

int cmd_oracle(const OracleConfig& cfg, std::ostream& out) {
  if (cfg.cap < 1) throw UsageError("--cap must be at least 1");
  IngestReport report;
  const auto corpus = load_inputs(cfg.inputs, cfg.exclude_punct, report);
  if (corpus.empty()) throw DataError("no valid sentences");
  for (const auto& s : corpus)
    if (s.tree.size() > cfg.cap)
      throw DataError("sentence " + s.id + " has length " +
                      std::to_string(s.tree.size()) + ", over cap " +
                      std::to_string(cfg.cap));

  out << "sentence_id\tlength\tobserved\tprojective_count\tprojective_mean"
         "\thead_fixed_count\thead_fixed_mean\tpermutation_mean\n";
  for (const auto& s : corpus) {
    const auto proj = exact_projective(s.tree, cfg.cap);
    const auto fixed = exact_head_fixed(s.tree, cfg.cap);
    const auto all = exact_all_orders(s.tree, cfg.cap);
    out << s.id << '\t' << s.tree.size() << '\t' << deplen(s.tree) << '\t'
        << proj.count << '\t' << format_fixed4(proj.mean) << '\t' << fixed.count
        << '\t' << format_fixed4(fixed.mean) << '\t' << format_fixed4(all.mean)
        << '\n';
  }
  out << "OK " << corpus.size() << " sentences\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependency length against random word-order and random-tree baselines"};
  app.require_subcommand(1);

  RunConfig run_cfg;
  auto* analyze = app.add_subcommand("analyze", "Compare attested dependency length with baselines");
  analyze->add_option("--input", run_cfg.inputs, "CoNLL-U file (repeatable)")->required();
  analyze->add_option("--baselines", run_cfg.baselines,
                      "Comma-separated subset of random-tree,free,projective,head-fixed")
      ->capture_default_str();
  analyze->add_option("--samples", run_cfg.samples, "Samples per sentence per baseline")
      ->capture_default_str();
  analyze->add_option("--seed", run_cfg.seed, "Global seed")->capture_default_str();
  analyze->add_flag("--exclude-punct", run_cfg.exclude_punct,
                    "Drop PUNCT tokens whose subtree is all punctuation");
  analyze->add_option("--min-len", run_cfg.min_len, "Shortest sentence kept")
      ->capture_default_str();
  analyze->add_option("--max-len", run_cfg.max_len, "Longest sentence kept");
  analyze->add_option("--min-bin", run_cfg.min_bin,
                      "Fewest sentences for a length to appear in the plot data")
      ->capture_default_str();
  analyze->add_option("--results-out", run_cfg.results_out, "Per-sentence CSV")
      ->capture_default_str();
  analyze->add_option("--plot-out", run_cfg.plot_out, "Per-length CSV")
      ->capture_default_str();

  OracleConfig oracle_cfg;
  auto* oracle = app.add_subcommand(
      "oracle", "Exact sample-space statistics by exhaustive enumeration");
  oracle->add_option("--input", oracle_cfg.inputs, "CoNLL-U file (repeatable)")->required();
  oracle->add_option("--cap", oracle_cfg.cap, "Longest sentence to enumerate")
      ->capture_default_str();
  oracle->add_flag("--exclude-punct", oracle_cfg.exclude_punct,
                   "Drop PUNCT tokens whose subtree is all punctuation");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(run_cfg, out);
    return cmd_oracle(oracle_cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace deplen::cli
