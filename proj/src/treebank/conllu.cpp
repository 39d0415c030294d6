#include "deplen/conllu.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace deplen {

namespace {

constexpr std::size_t kColumns = 10;

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// `# sent_id = X` (the '=' is optional in older files).
std::optional<std::string> sent_id_of(std::string_view comment) {
  auto body = trim(comment.substr(1));
  constexpr std::string_view key = "sent_id";
  if (!body.starts_with(key)) return std::nullopt;
  body = trim(body.substr(key.size()));
  if (body.starts_with('=')) body = trim(body.substr(1));
  if (body.empty()) return std::nullopt;
  return std::string(body);
}

class BlockReader {
 public:
  BlockReader(std::string_view source, IngestReport& report,
              std::vector<RawSentence>& out)
      : source_(source), report_(report), out_(out) {}

  void comment(std::string_view line) {
    if (auto id = sent_id_of(line)) sent_id_ = std::move(*id);
  }

  void token_line(std::string_view line) {
    has_tokens_ = true;
    if (!valid_) return;
    const auto f = split_tabs(line);
    if (f.size() != kColumns) {
      valid_ = false;
      return;
    }
    if (f[0].find('-') != std::string_view::npos ||
        f[0].find('.') != std::string_view::npos)
      return;
    const auto id = parse_int(f[0]);
    const auto head = parse_int(f[6]);
    if (!id || !head || *id != static_cast<int>(tokens_.size()) + 1 || *head < 0) {
      valid_ = false;
      return;
    }
    tokens_.push_back(Token{*id, std::string(f[1]), std::string(f[3]), *head,
                            std::string(f[7])});
  }

  void end_block() {
    if (!has_tokens_) {
      reset();
      return;
    }
    ++block_;
    if (valid_ && !tokens_.empty()) {
      RawSentence s;
      s.named = !sent_id_.empty();
      s.sentence_id = s.named
                          ? sent_id_
                          : std::string(source_) + ":" + std::to_string(block_);
      s.tokens = std::move(tokens_);
      out_.push_back(std::move(s));
      ++report_.parsed;
    } else {
      ++report_.skipped_invalid;
    }
    reset();
  }

 private:
  void reset() {
    tokens_.clear();
    sent_id_.clear();
    valid_ = true;
    has_tokens_ = false;
  }

  std::string_view source_;
  IngestReport& report_;
  std::vector<RawSentence>& out_;
  std::vector<Token> tokens_;
  std::string sent_id_;
  std::size_t block_ = 0;
  bool valid_ = true;
  bool has_tokens_ = false;
};

std::string_view or_blank(const std::string& s) {
  return s.empty() ? std::string_view("_") : std::string_view(s);
}

}  // namespace

IngestReport& IngestReport::operator+=(const IngestReport& other) {
  parsed += other.parsed;
  skipped_invalid += other.skipped_invalid;
  punct_dropped += other.punct_dropped;
  nonleaf_punct_kept += other.nonleaf_punct_kept;
  return *this;
}

ValidationError::ValidationError(const std::string& sentence_id,
                                 const std::string& detail)
    : TreeError("sentence " + sentence_id + ": " + detail),
      sentence_id_(sentence_id) {}

std::vector<RawSentence> parse_conllu(std::istream& in, std::string_view source,
                                      IngestReport& report) {
  std::vector<RawSentence> out;
  BlockReader reader(source, report, out);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view(line);
    if (view.ends_with('\r')) view.remove_suffix(1);
    if (trim(view).empty())
      reader.end_block();
    else if (view.starts_with('#'))
      reader.comment(view);
    else
      reader.token_line(view);
  }
  reader.end_block();
  return out;
}

DepTree validate(const RawSentence& raw) {
  std::vector<int> heads;
  std::vector<TokenLabel> labels;
  heads.reserve(raw.tokens.size());
  labels.reserve(raw.tokens.size());
  for (std::size_t i = 0; i < raw.tokens.size(); ++i) {
    const Token& t = raw.tokens[i];
    if (t.index != static_cast<int>(i) + 1)
      throw ValidationError(raw.sentence_id,
                            "token " + std::to_string(t.index) + ": out of sequence");
    heads.push_back(t.head);
    labels.push_back({t.form, t.upos, t.deprel});
  }
  try {
    return DepTree::from_heads(heads, std::move(labels));
  } catch (const TreeError& e) {
    throw ValidationError(raw.sentence_id, e.what());
  }
}

std::vector<Sentence> load_conllu(std::istream& in, std::string_view source,
                                  const LoadOptions& options,
                                  IngestReport& report) {
  IngestReport parse_report;
  auto raws = parse_conllu(in, source, parse_report);
  report.skipped_invalid += parse_report.skipped_invalid;

  std::vector<Sentence> out;
  out.reserve(raws.size());
  for (const auto& raw : raws) {
    std::optional<DepTree> tree;
    try {
      tree = validate(raw);
    } catch (const ValidationError&) {
      ++report.skipped_invalid;
      continue;
    }
    if (options.exclude_punct) tree = strip_punct(*tree, report);
    if (!tree) {
      ++report.skipped_invalid;
      continue;
    }
    ++report.parsed;
    out.push_back({options.namespace_ids && raw.named
                       ? std::string(source) + ":" + raw.sentence_id
                       : raw.sentence_id,
                   std::move(*tree)});
  }
  return out;
}

void write_conllu(std::ostream& out, const Sentence& sentence) {
  const DepTree& tree = sentence.tree;
  out << "# sent_id = " << sentence.id << '\n';
  for (NodeId v = 1; v <= tree.size(); ++v) {
    const TokenLabel blank{"_", "_", "_"};
    const TokenLabel& l = tree.has_labels() ? tree.label(v) : blank;
    out << v << '\t' << or_blank(l.form) << "\t_\t" << or_blank(l.upos)
        << "\t_\t_\t" << tree.parent(v) << '\t' << or_blank(l.deprel)
        << "\t_\t_\n";
  }
  out << '\n';
}

}  // namespace deplen
