#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "srl/conll.h"
#include "srl/preprocess.h"
#include "srl/xml_reader.h"
#include "test_util.h"

namespace srl {
namespace {

Corpus FixtureInput() {
  std::ifstream in(testing::FixturePath("preprocess_input.xml"));
  XmlReport report;
  Corpus corpus = ParseXml(in, &report);
  EXPECT_TRUE(report.warnings.empty());
  EXPECT_TRUE(report.rejected.empty());
  return corpus;
}

Instance Make(std::vector<std::string> tokens, int predicate, std::vector<ArgumentSpan> spans) {
  Instance instance;
  instance.sentence_id = "1";
  instance.tokens = std::move(tokens);
  instance.predicate_index = predicate;
  instance.predicate_lemma = "x";
  instance.spans = std::move(spans);
  return instance;
}

Corpus One(Instance instance) {
  Corpus corpus;
  corpus.instances.push_back(std::move(instance));
  return corpus;
}

TEST(Preprocess, FixtureMatchesExpectedCorpus) {
  PreprocessReport report;
  const Corpus out = Preprocess(FixtureInput(), PreprocessRules::All(),
                                ContractionLexicon::PortugueseDefault(), &report);
  EXPECT_EQ(WriteConllString(out),
            testing::ReadFile(testing::FixturePath("preprocess_expected.conll")));
  std::ostringstream counts;
  report.Write(counts);
  EXPECT_EQ(counts.str(),
            testing::ReadFile(testing::FixturePath("preprocess_expected_report.tsv")) +
                "rejected\tcontraction-boundary:1: contraction 'de o' crosses the boundary of "
                "(3,4,A1)\n");
}

TEST(Preprocess, NoRulesIsIdentity) {
  const Corpus input = FixtureInput();
  PreprocessReport report;
  EXPECT_EQ(Preprocess(input, PreprocessRules{}, ContractionLexicon::PortugueseDefault(), &report),
            input);
  EXPECT_TRUE(report.AllZero());
}

TEST(Preprocess, IdempotentAfterOnePass) {
  const ContractionLexicon lexicon = ContractionLexicon::PortugueseDefault();
  PreprocessReport first, second;
  const Corpus once = Preprocess(FixtureInput(), PreprocessRules::All(), lexicon, &first);
  EXPECT_EQ(Preprocess(once, PreprocessRules::All(), lexicon, &second), once);
  EXPECT_TRUE(second.AllZero());
}

TEST(Preprocess, RuleNames) {
  const PreprocessRules some = PreprocessRules::Parse("drop_labels,split_underscore");
  EXPECT_TRUE(some.drop_labels);
  EXPECT_TRUE(some.split_underscore);
  EXPECT_FALSE(some.join_contractions);
  const PreprocessRules all = PreprocessRules::Parse("all");
  EXPECT_TRUE(all.drop_multilabel && all.split_underscore && all.join_contractions &&
              all.drop_labels && all.drop_flagged && all.rechain_continuations);
  EXPECT_THROW(PreprocessRules::Parse("drop_labels,frobnicate"), std::invalid_argument);
}

TEST(Preprocess, RulesRunInFixedOrder) {
  // "de_o" splits into "de" "o", which then contract to "do" regardless of
  // the order the rules were named in.
  const Corpus input = One(Make({"gosto", "de_o", "mar"}, 0, {{0, 0, "V"}, {1, 2, "A1"}}));
  PreprocessReport report;
  const Corpus out = Preprocess(input, PreprocessRules::Parse("join_contractions,split_underscore"),
                                ContractionLexicon::PortugueseDefault(), &report);
  EXPECT_EQ(out.instances[0].tokens, (std::vector<std::string>{"gosto", "do", "mar"}));
  EXPECT_EQ(out.instances[0].spans, (std::vector<ArgumentSpan>{{0, 0, "V"}, {1, 2, "A1"}}));
  EXPECT_EQ(report.tokens_split, 1);
  EXPECT_EQ(report.contractions_joined, 1);
}

TEST(Preprocess, UnderscoreSplitKeepsEmptyPiecesOut) {
  const Corpus input = One(Make({"_a__b_", "v"}, 1, {{0, 0, "A0"}, {1, 1, "V"}}));
  PreprocessReport report;
  const Corpus out = Preprocess(input, PreprocessRules::Parse("split_underscore"),
                                ContractionLexicon(), &report);
  EXPECT_EQ(out.instances[0].tokens, (std::vector<std::string>{"a", "b", "v"}));
  EXPECT_EQ(out.instances[0].predicate_index, 2);
  EXPECT_EQ(out.instances[0].spans, (std::vector<ArgumentSpan>{{0, 1, "A0"}, {2, 2, "V"}}));
}

TEST(Preprocess, DropLabelsMatchesExactLabelsOnly) {
  const Corpus input =
      One(Make({"a", "b", "c", "v"}, 3,
               {{0, 0, "AM-MED"}, {1, 1, "C-AM-MED"}, {2, 2, "AM-PIN"}, {3, 3, "V"}}));
  PreprocessReport report;
  const Corpus out =
      Preprocess(input, PreprocessRules::Parse("drop_labels"), ContractionLexicon(), &report);
  EXPECT_EQ(out.instances[0].spans, (std::vector<ArgumentSpan>{{1, 1, "C-AM-MED"}, {3, 3, "V"}}));
  EXPECT_EQ(report.label_spans_dropped, 2);
}

TEST(Preprocess, RechainMergesChainsOfContinuations) {
  const Corpus input = One(Make({"a", "b", "c", "d", "v", "e", "f"}, 4,
                                {{0, 0, "A1"},
                                 {1, 1, "C-A1"},
                                 {2, 3, "C-A1"},
                                 {4, 4, "V"},
                                 {5, 5, "AM-TMP"},
                                 {6, 6, "C-AM-TMP"}}));
  PreprocessReport report;
  const Corpus out = Preprocess(input, PreprocessRules::Parse("rechain_continuations"),
                                ContractionLexicon(), &report);
  EXPECT_EQ(out.instances[0].spans,
            (std::vector<ArgumentSpan>{{0, 3, "A1"}, {4, 4, "V"}, {5, 6, "AM-TMP"}}));
  EXPECT_EQ(report.continuations_rechained, 3);
}

TEST(Preprocess, RechainLeavesSeparatedContinuations) {
  const Corpus input =
      One(Make({"a", "v", "b"}, 1, {{0, 0, "A1"}, {1, 1, "V"}, {2, 2, "C-A1"}}));
  PreprocessReport report;
  EXPECT_EQ(Preprocess(input, PreprocessRules::Parse("rechain_continuations"),
                       ContractionLexicon(), &report),
            input);
}

TEST(Preprocess, CountsArePerInstance) {
  Corpus corpus;
  corpus.instances.push_back(Make({"x_y", "v", "w"}, 1, {{1, 1, "V"}}));
  corpus.instances.push_back(Make({"x_y", "v", "w"}, 2, {{2, 2, "V"}}));
  PreprocessReport report;
  Preprocess(corpus, PreprocessRules::Parse("split_underscore"), ContractionLexicon(), &report);
  EXPECT_EQ(report.tokens_split, 2);
}

TEST(ContractionLexicon, JoinIsCaseInsensitiveAndCapitalizes) {
  const ContractionLexicon lexicon = ContractionLexicon::PortugueseDefault();
  EXPECT_EQ(lexicon.Join("de", "o"), "do");
  EXPECT_EQ(lexicon.Join("De", "o"), "Do");
  EXPECT_EQ(lexicon.Join("EM", "A"), "Na");
  EXPECT_EQ(lexicon.Join("A", "aquele"), "Àquele");
  EXPECT_EQ(lexicon.Join("a", "a"), "à");
  EXPECT_EQ(lexicon.Join("de", "casa"), std::nullopt);
}

TEST(ContractionLexicon, ShippedTableEqualsBuiltIn) {
  std::ifstream in(std::string(SRL_DATA_DIR) + "/contractions.tsv");
  ASSERT_TRUE(in) << SRL_DATA_DIR;
  EXPECT_EQ(ContractionLexicon::Load(in), ContractionLexicon::PortugueseDefault());
}

TEST(ContractionLexicon, LoadSkipsCommentsAndRejectsBadLines) {
  std::istringstream good("# comment\n\nde\to\tdo\n");
  EXPECT_EQ(ContractionLexicon::Load(good).size(), 1u);
  std::istringstream bad("de\to\n");
  EXPECT_THROW(ContractionLexicon::Load(bad), ParseError);
}

}  // namespace
}  // namespace srl
