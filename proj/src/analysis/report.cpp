#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "deplen/analysis.hpp"

namespace deplen {

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_fixed4(double value) {
  if (value == 0.0) value = 0.0;  // no "-0.0000"
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 4);
  if (ec != std::errc()) return std::isnan(value) ? "nan" : "inf";
  return std::string(buf, end);
}

void write_results_csv(std::ostream& out, std::span<const SentenceResult> results) {
  out << "sentence_id,length,observed,baseline,mean,stddev,samples\n";
  for (const auto& r : results) {
    const std::string id = csv_field(r.sentence_id);
    for (const auto& b : r.baselines) {
      out << id << ',' << r.length << ',' << r.observed << ',' << to_string(b.kind)
          << ',' << format_fixed4(b.mean) << ',' << format_fixed4(b.stddev) << ','
          << b.samples << '\n';
    }
  }
}

void write_plot_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << "length,series,mean_deplen,n_sentences\n";
  for (const auto& row : rows)
    out << row.length << ',' << row.series << ',' << format_fixed4(row.mean_deplen)
        << ',' << row.n_sentences << '\n';
}

void print_summary(std::ostream& out, std::span<const BaselineSummary> summary) {
  out << std::left << std::setw(12) << "baseline" << std::right << std::setw(11)
      << "sentences" << std::setw(12) << "observed" << std::setw(12) << "baseline"
      << std::setw(14) << "obs<base" << '\n';
  for (const auto& s : summary) {
    out << std::left << std::setw(12) << to_string(s.kind) << std::right
        << std::setw(11) << s.n_sentences << std::setw(12)
        << format_fixed4(s.observed_mean) << std::setw(12)
        << format_fixed4(s.baseline_mean) << std::setw(14)
        << format_fixed4(s.fraction_below) << '\n';
  }
}

}  // namespace deplen
