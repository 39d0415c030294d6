#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "deplen/conllu.hpp"
#include "fixtures.hpp"

namespace deplen {
namespace {

std::vector<RawSentence> parse(const std::string& text, IngestReport& report) {
  std::istringstream in(text);
  return parse_conllu(in, "mem", report);
}

std::string token(int id, const std::string& form, const std::string& upos, int head,
                  const std::string& rel = "dep") {
  return std::to_string(id) + "\t" + form + "\t_\t" + upos + "\t_\t_\t" +
         std::to_string(head) + "\t" + rel + "\t_\t_\n";
}

TEST(ParseConllu, ThrewOutBlock) {
  std::ifstream in(testing::data_path("threw_out.conllu"));
  IngestReport report;
  const auto sents = parse_conllu(in, "threw_out.conllu", report);
  ASSERT_EQ(sents.size(), 1u);
  EXPECT_EQ(sents[0].sentence_id, "threw_out");
  ASSERT_EQ(sents[0].tokens.size(), 5u);
  EXPECT_EQ(sents[0].tokens[1].form, "threw");
  EXPECT_EQ(sents[0].tokens[1].head, 0);
  EXPECT_EQ(sents[0].tokens[4].deprel, "obj");
  EXPECT_EQ(report.parsed, 1u);
  EXPECT_EQ(report.skipped_invalid, 0u);
}

TEST(ParseConllu, EmptyInput) {
  IngestReport report;
  EXPECT_TRUE(parse("", report).empty());
  EXPECT_EQ(report.parsed, 0u);
  EXPECT_TRUE(parse("\n\n# only a comment\n\n", report).empty());
  EXPECT_EQ(report.total(), 0u);
}

TEST(ParseConllu, NonIntegerHeadSkipsBlock) {
  IngestReport report;
  const auto text = "1\tA\t_\tX\t_\t_\tx\tdep\t_\t_\n\n" + token(1, "B", "X", 0);
  const auto sents = parse(text, report);
  ASSERT_EQ(sents.size(), 1u);
  EXPECT_EQ(sents[0].tokens[0].form, "B");
  EXPECT_EQ(report.skipped_invalid, 1u);
  EXPECT_EQ(report.parsed, 1u);
}

TEST(ParseConllu, WrongColumnCountSkipsBlock) {
  IngestReport report;
  EXPECT_TRUE(parse("1\tA\t_\tX\t_\t_\t0\troot\t_\n", report).empty());
  EXPECT_TRUE(parse("1 A _ X _ _ 0 root _ _\n", report).empty());
  EXPECT_EQ(report.skipped_invalid, 2u);
}

TEST(ParseConllu, SkipsRangesAndEmptyNodes) {
  IngestReport report;
  const auto text = "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n" + token(1, "do", "AUX", 3) +
                    token(2, "n't", "PART", 3) + token(3, "go", "VERB", 0) +
                    "3.1\tgo\t_\tVERB\t_\t_\t_\t_\t3:conj\t_\n";
  const auto sents = parse(text, report);
  ASSERT_EQ(sents.size(), 1u);
  EXPECT_EQ(sents[0].tokens.size(), 3u);
  EXPECT_NO_THROW(validate(sents[0]));
}

TEST(ParseConllu, IdsFromCommentOrCounter) {
  IngestReport report;
  const auto text = "# sent_id = a-1\n" + token(1, "x", "X", 0) + "\n" +
                    token(1, "y", "X", 0) + "\n# sent_id b\n" + token(1, "z", "X", 0);
  const auto sents = parse(text, report);
  ASSERT_EQ(sents.size(), 3u);
  EXPECT_EQ(sents[0].sentence_id, "a-1");
  EXPECT_TRUE(sents[0].named);
  EXPECT_EQ(sents[1].sentence_id, "mem:2");
  EXPECT_FALSE(sents[1].named);
  EXPECT_EQ(sents[2].sentence_id, "b");
}

TEST(ParseConllu, ToleratesCrlf) {
  IngestReport report;
  const auto sents = parse("# sent_id = w\r\n1\tA\t_\tX\t_\t_\t0\troot\t_\t_\r\n\r\n", report);
  ASSERT_EQ(sents.size(), 1u);
  EXPECT_EQ(sents[0].sentence_id, "w");
  EXPECT_EQ(sents[0].tokens[0].deprel, "root");
}

TEST(ParseConllu, OutOfSequenceIdIsMalformed) {
  IngestReport report;
  EXPECT_TRUE(parse(token(2, "a", "X", 0), report).empty());
  EXPECT_EQ(report.skipped_invalid, 1u);
}

RawSentence raw(const std::vector<int>& heads) {
  RawSentence r{"s7", true, {}};
  for (std::size_t i = 0; i < heads.size(); ++i)
    r.tokens.push_back({static_cast<int>(i) + 1, "w", "X", heads[i], "dep"});
  return r;
}

TEST(Validate, ThrewOut) {
  const auto t = validate(raw(testing::kThrewOutHeads));
  EXPECT_EQ(t.root(), 2);
  EXPECT_EQ(t.size(), 5);
}

TEST(Validate, ErrorsNameSentenceAndToken) {
  const auto expect_error = [](const std::vector<int>& heads, const std::string& needle) {
    try {
      validate(raw(heads));
      ADD_FAILURE() << "no error for " << needle;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.sentence_id(), "s7");
      const std::string what = e.what();
      EXPECT_NE(what.find("sentence s7"), std::string::npos) << what;
      EXPECT_NE(what.find(needle), std::string::npos) << what;
    }
  };
  expect_error({2, 1}, "no root");
  expect_error({2, 0, 2, 5, 4}, "token 4");
  expect_error({0, 9}, "token 2");
  expect_error({0, 0}, "token 2");
}

DepTree labeled(const std::vector<int>& heads, const std::vector<std::string>& upos) {
  std::vector<TokenLabel> labels;
  for (const auto& u : upos) labels.push_back({"w", u, "dep"});
  return DepTree::from_heads(heads, labels);
}

TEST(StripPunct, DropsTrailingPeriod) {
  const auto t = labeled({2, 0, 2, 5, 2, 2}, {"PROPN", "VERB", "ADP", "DET", "NOUN", "PUNCT"});
  IngestReport report;
  const auto out = strip_punct(t, report);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->heads(), testing::kThrewOutHeads);
  EXPECT_EQ(report.punct_dropped, 1u);
  EXPECT_EQ(report.nonleaf_punct_kept, 0u);
}

TEST(StripPunct, ReindexesMiddlePunct) {
  // A , B  with the comma attached to B.
  const auto t = labeled({0, 3, 1}, {"NOUN", "PUNCT", "NOUN"});
  IngestReport report;
  const auto out = strip_punct(t, report);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->heads(), (std::vector<int>{0, 1}));
  EXPECT_EQ(out->label(2).upos, "NOUN");
}

TEST(StripPunct, NoPunctIsIdentity) {
  const auto t = labeled(testing::kThrewOutHeads, {"PROPN", "VERB", "ADP", "DET", "NOUN"});
  IngestReport report;
  EXPECT_EQ(strip_punct(t, report), t);
  EXPECT_EQ(report.punct_dropped, 0u);
}

TEST(StripPunct, KeepsPunctWithDependents) {
  // The quote mark heads a noun.
  const auto t = labeled({0, 1, 2}, {"VERB", "PUNCT", "NOUN"});
  IngestReport report;
  EXPECT_EQ(strip_punct(t, report), t);
  EXPECT_EQ(report.nonleaf_punct_kept, 1u);
  EXPECT_EQ(report.punct_dropped, 0u);
}

TEST(StripPunct, AllPunctSentenceVanishes) {
  IngestReport report;
  EXPECT_FALSE(strip_punct(labeled({0, 1}, {"PUNCT", "PUNCT"}), report));
  EXPECT_EQ(report.punct_dropped, 2u);
}

TEST(StripPunct, IdempotentOnCorpus) {
  std::ifstream in(testing::corpus_path());
  IngestReport report;
  const auto corpus = load_conllu(in, "cs_pud", {}, report);
  ASSERT_EQ(corpus.size(), 1000u);
  std::size_t changed = 0;
  for (const auto& s : corpus) {
    IngestReport r1, r2;
    const auto once = strip_punct(s.tree, r1);
    ASSERT_TRUE(once);
    changed += once->size() != s.tree.size();
    ASSERT_EQ(strip_punct(*once, r2), once);
    ASSERT_EQ(r2.punct_dropped, 0u);
    // Every yielded tree: one root, n-1 arcs, all nodes reachable.
    ASSERT_EQ(once->topological_order().size(), static_cast<std::size_t>(once->size()));
  }
  EXPECT_GT(changed, 900u);
}

TEST(LoadConllu, CountsMixedFile) {
  std::ifstream in(testing::data_path("mixed.conllu"));
  IngestReport report;
  const auto corpus = load_conllu(in, "mixed.conllu", {.exclude_punct = true}, report);
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].id, "good");
  EXPECT_EQ(corpus[1].id, "mixed.conllu:4");
  EXPECT_EQ(corpus[1].tree.size(), 1);
  EXPECT_EQ(report.parsed, 2u);
  EXPECT_EQ(report.skipped_invalid, 2u);  // bad head, cycle
  EXPECT_EQ(report.punct_dropped, 1u);
  EXPECT_EQ(report.total(), 4u);
}

TEST(LoadConllu, NamespacedIds) {
  std::ifstream in(testing::data_path("threw_out.conllu"));
  IngestReport report;
  const auto corpus = load_conllu(in, "a.conllu", {.namespace_ids = true}, report);
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_EQ(corpus[0].id, "a.conllu:threw_out");
}

TEST(WriteConllu, RoundTripsCorpus) {
  std::ifstream in(testing::corpus_path());
  IngestReport report;
  const auto corpus = load_conllu(in, "cs_pud", {}, report);
  std::ostringstream out;
  for (const auto& s : corpus) write_conllu(out, s);

  std::istringstream back(out.str());
  IngestReport report2;
  const auto again = load_conllu(back, "cs_pud", {}, report2);
  ASSERT_EQ(again.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ASSERT_EQ(again[i].id, corpus[i].id);
    ASSERT_EQ(again[i].tree, corpus[i].tree);
  }
}

TEST(WriteConllu, TenTabSeparatedColumns) {
  std::ostringstream out;
  write_conllu(out, {"x", DepTree::from_heads(std::vector<int>{0, 1})});
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "# sent_id = x");
  std::getline(lines, line);
  EXPECT_EQ(line, "1\t_\t_\t_\t_\t_\t0\t_\t_\t_");
  std::getline(lines, line);
  EXPECT_EQ(line, "2\t_\t_\t_\t_\t_\t1\t_\t_\t_");
  std::getline(lines, line);
  EXPECT_EQ(line, "");
}

}  // namespace
}  // namespace deplen
