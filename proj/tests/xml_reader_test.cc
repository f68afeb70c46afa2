#include <gtest/gtest.h>

#include <sstream>

#include "srl/xml_reader.h"

namespace srl {
namespace {

Corpus Read(const std::string& text, XmlReport* report) {
  std::istringstream in(text);
  return ParseXml(in, report);
}

TEST(XmlReader, ReadsInstancesAndFlags) {
  XmlReport report;
  const Corpus corpus = Read(
      "<corpus><sentence id='s1'>"
      "<token>Só</token><token>precisa</token><token>ganhar</token><token>experiência</token>"
      "<predicate index='2' lemma='ganhar' flags='LATER, INCOMPLETE'>"
      "<argument start='3' end='3' label='A1' flags='LATER'/>"
      "<argument start='2' end='2' label='V'/>"
      "</predicate></sentence></corpus>",
      &report);
  ASSERT_EQ(corpus.instances.size(), 1u);
  const Instance& instance = corpus.instances[0];
  EXPECT_EQ(instance.id(), "s1:2");
  EXPECT_EQ(instance.predicate_lemma, "ganhar");
  EXPECT_EQ(instance.spans, (std::vector<ArgumentSpan>{{2, 2, "V"}, {3, 3, "A1"}}));
  EXPECT_EQ(instance.flags, (std::vector<std::string>{"INCOMPLETE", "LATER"}));
  EXPECT_TRUE(report.warnings.empty());
}

TEST(XmlReader, SentenceIdsDefaultToOrdinal) {
  XmlReport report;
  const Corpus corpus = Read(
      "<corpus><sentence><token>a</token><predicate index='0'/></sentence>"
      "<sentence><token>b</token><predicate index='0'/></sentence></corpus>",
      &report);
  ASSERT_EQ(corpus.instances.size(), 2u);
  EXPECT_EQ(corpus.instances[1].id(), "2:0");
  EXPECT_EQ(corpus.instances[1].predicate_lemma, "b");
}

TEST(XmlReader, UnknownElementsWarn) {
  XmlReport report;
  const Corpus corpus = Read(
      "<corpus><meta/><sentence id='1'><token>a</token><note/>"
      "<predicate index='0'><gloss/></predicate></sentence></corpus>",
      &report);
  EXPECT_EQ(corpus.instances.size(), 1u);
  EXPECT_EQ(report.warnings.size(), 3u);
}

TEST(XmlReader, BadInstancesAreRejectedNotFatal) {
  XmlReport report;
  const Corpus corpus = Read(
      "<corpus><sentence id='1'><token>a</token><token>b</token>"
      "<predicate index='5'/>"
      "<predicate index='0'><argument start='1' end='2' label='A1'/></predicate>"
      "<predicate index='1'><argument start='0' end='0'/></predicate>"
      "<predicate index='x'/>"
      "<predicate index='1'><argument start='0' end='0' label='A0'/></predicate>"
      "</sentence></corpus>",
      &report);
  ASSERT_EQ(corpus.instances.size(), 1u);
  EXPECT_EQ(corpus.instances[0].id(), "1:1");
  EXPECT_EQ(report.rejected.size(), 4u);
}

TEST(XmlReader, MalformedDocumentThrows) {
  XmlReport report;
  EXPECT_THROW(Read("<corpus><sentence></corpus>", &report), ParseError);
  EXPECT_THROW(Read("<texts/>", &report), ParseError);
}

}  // namespace
}  // namespace srl
