#include <gtest/gtest.h>

#include "srl/conll.h"
#include "srl/synthetic.h"

namespace srl {
namespace {

const char kTwoPredicates[] =
    "O\t-\t(A0*\t*\n"
    "menino\t-\t*)\t(A0*)\n"
    "quer\tquerer\t(V*)\t*\n"
    "ganhar\tganhar\t(A1*\t(V*)\n"
    "experiência\t-\t*)\t(A1*)\n"
    ".\t-\t*\t*\n"
    "\n";

TEST(Conll, ParsesOneInstancePerPredicate) {
  const Corpus corpus = ParseConllString(kTwoPredicates);
  ASSERT_EQ(corpus.instances.size(), 2u);
  const Instance& querer = corpus.instances[0];
  EXPECT_EQ(querer.id(), "1:2");
  EXPECT_EQ(querer.predicate_lemma, "querer");
  EXPECT_EQ(querer.tokens.size(), 6u);
  EXPECT_EQ(querer.spans,
            (std::vector<ArgumentSpan>{{0, 1, "A0"}, {2, 2, "V"}, {3, 4, "A1"}}));
  const Instance& ganhar = corpus.instances[1];
  EXPECT_EQ(ganhar.id(), "1:3");
  EXPECT_EQ(ganhar.spans,
            (std::vector<ArgumentSpan>{{1, 1, "A0"}, {3, 3, "V"}, {4, 4, "A1"}}));
}

TEST(Conll, WritesCanonicalForm) {
  EXPECT_EQ(WriteConllString(ParseConllString(kTwoPredicates)), kTwoPredicates);
}

TEST(Conll, AcceptsAnyWhitespaceBetweenColumns) {
  const Corpus a = ParseConllString("ele  -   (A0*)\ncorre correr (V*)\n\n");
  const Corpus b = ParseConllString("ele\t-\t(A0*)\ncorre\tcorrer\t(V*)\n\n");
  EXPECT_EQ(a, b);
}

TEST(Conll, SentenceIdsFromOrdinalOrDirective) {
  const Corpus corpus = ParseConllString(
      "a\tx\t(V*)\n\n"
      "# sentence doc3-s17\n"
      "b\ty\t(V*)\n\n"
      "c\tz\t(V*)\n\n");
  ASSERT_EQ(corpus.instances.size(), 3u);
  EXPECT_EQ(corpus.instances[0].sentence_id, "1");
  EXPECT_EQ(corpus.instances[1].sentence_id, "doc3-s17");
  EXPECT_EQ(corpus.instances[2].sentence_id, "3");
  const std::string written = WriteConllString(corpus);
  EXPECT_NE(written.find("# sentence doc3-s17\n"), std::string::npos);
  EXPECT_EQ(ParseConllString(written), corpus);
}

TEST(Conll, SentenceWithoutPredicatesHasNoInstances) {
  const Corpus corpus = ParseConllString("sim\t-\n.\t-\n\nele\tir\t(V*)\n\n");
  ASSERT_EQ(corpus.instances.size(), 1u);
  EXPECT_EQ(corpus.instances[0].sentence_id, "2");
}

TEST(Conll, ToleratesMissingFinalBlankLine) {
  EXPECT_EQ(ParseConllString("a\tx\t(V*)").instances.size(), 1u);
}

void ExpectParseErrorAtLine(const std::string& text, int line, const std::string& fragment) {
  try {
    ParseConllString(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& error) {
    EXPECT_EQ(error.line(), line) << error.what();
    EXPECT_NE(std::string(error.what()).find(fragment), std::string::npos) << error.what();
  }
}

TEST(Conll, Errors) {
  ExpectParseErrorAtLine("a\t-\t*\nb\tx\t(V*)\t*\n\n", 2, "column count mismatch");
  ExpectParseErrorAtLine("a\tx\t(V*)\t*\n\n", 1, "column count mismatch");
  ExpectParseErrorAtLine("a\t-\t(A0*\nb\t-\t(A1*\nc\tx\t(V*)\n\n", 2, "nested");
  ExpectParseErrorAtLine("a\t-\t*)\nc\tx\t(V*)\n\n", 1, "closing bracket");
  ExpectParseErrorAtLine("a\t-\t(A0*\nc\tx\t*\n\n", 2, "not closed");
  ExpectParseErrorAtLine("a\t-\tA0\nc\tx\t(V*)\n\n", 1, "malformed props");
}

TEST(Conll, WriterRejectsOverlapAndDuplicatePredicates) {
  Corpus corpus = ParseConllString("a\t-\t(A0*)\nb\tx\t(V*)\n\n");
  Corpus overlap = corpus;
  overlap.instances[0].spans.push_back({0, 1, "A1"});
  EXPECT_THROW(WriteConllString(overlap), std::invalid_argument);
  Corpus duplicate = corpus;
  duplicate.instances.push_back(corpus.instances[0]);
  EXPECT_THROW(WriteConllString(duplicate), std::invalid_argument);
}

TEST(Conll, WriterOrdersColumnsByPredicatePosition) {
  Corpus corpus = ParseConllString(kTwoPredicates);
  std::swap(corpus.instances[0], corpus.instances[1]);
  EXPECT_EQ(WriteConllString(corpus), kTwoPredicates);
}

TEST(Conll, RoundTripIsByteIdentical) {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    SyntheticOptions options;
    options.sentences = 40;
    options.seed = seed;
    const std::string text = WriteConllString(SyntheticCorpus(options));
    const Corpus parsed = ParseConllString(text);
    EXPECT_EQ(WriteConllString(parsed), text) << "seed " << seed;
    EXPECT_EQ(parsed, ParseConllString(WriteConllString(parsed)));
  }
}

}  // namespace
}  // namespace srl
