// CoNLL-U treebank reading, validation, and punctuation filtering.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deplen/dep_tree.hpp"

namespace deplen {

struct Token {
  int index = 0;
  std::string form;
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;
};

struct RawSentence {
  std::string sentence_id;
  bool named = false;  // id came from a `# sent_id` comment
  std::vector<Token> tokens;
};

/// A validated tree with its identity.
struct Sentence {
  std::string id;
  DepTree tree;
};

struct IngestReport {
  std::size_t parsed = 0;
  std::size_t skipped_invalid = 0;
  std::size_t punct_dropped = 0;
  std::size_t nonleaf_punct_kept = 0;

  std::size_t total() const { return parsed + skipped_invalid; }
  IngestReport& operator+=(const IngestReport& other);
};

/// Validation failure naming the sentence and the offending token.
class ValidationError : public TreeError {
 public:
  ValidationError(const std::string& sentence_id, const std::string& detail);
  const std::string& sentence_id() const { return sentence_id_; }

 private:
  std::string sentence_id_;
};

/// Splits a CoNLL-U stream into sentences.
///
/// Comment lines start with '#'; `# sent_id = X` names the sentence, otherwise
/// it is called `<source>:<k>` with k the 1-based block number. Multiword
/// ranges (`1-2`) and empty nodes (`1.1`) are skipped. A block with a
/// malformed token line is dropped and counted in `report.skipped_invalid`;
/// the rest of the stream is still read.
std::vector<RawSentence> parse_conllu(std::istream& in, std::string_view source,
                                      IngestReport& report);

/// Checks that the heads form one rooted tree and builds it.
/// Throws ValidationError otherwise.
DepTree validate(const RawSentence& raw);

/// Removes PUNCT tokens whose whole subtree is punctuation, re-indexing the
/// rest in order. Returns nullopt if nothing remains. Counts drops and kept
/// non-leaf punctuation into `report`. Requires labels on the tree; an
/// unlabeled tree is returned unchanged.
std::optional<DepTree> strip_punct(const DepTree& tree, IngestReport& report);

/// Reading options for load_conllu.
struct LoadOptions {
  bool exclude_punct = false;
  /// Prefix `# sent_id` names with `<source>:` so several files can be mixed.
  bool namespace_ids = false;
};

/// parse_conllu + validate (+ strip_punct). Invalid trees count as
/// skipped_invalid; `parsed` counts sentences returned.
std::vector<Sentence> load_conllu(std::istream& in, std::string_view source,
                                  const LoadOptions& options,
                                  IngestReport& report);

/// Writes one sentence as a CoNLL-U block, terminated by a blank line.
void write_conllu(std::ostream& out, const Sentence& sentence);

}  // namespace deplen
