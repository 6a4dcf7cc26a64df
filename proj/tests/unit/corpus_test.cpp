#include <gtest/gtest.h>

#include "aspectminer/corpus.hpp"

using namespace aspectminer;

TEST(Corpus, AnnotatedSentence) {
  auto c = parse_corpus_file("[t]\nbattery life[+2]##the battery life is great\n", "cam");
  ASSERT_EQ(c.sentences.size(), 2u);
  const auto& s = c.sentences[1];
  EXPECT_EQ(s.raw_text, "the battery life is great");
  ASSERT_EQ(s.gold.size(), 1u);
  EXPECT_EQ(s.gold[0].aspect_term, "battery life");
  EXPECT_EQ(s.gold[0].strength, 2);
  EXPECT_EQ(s.gold[0].flags, 0);
}

TEST(Corpus, PlainSentence) {
  auto c = parse_corpus_file("##plain sentence", "p");
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_EQ(c.sentences[0].raw_text, "plain sentence");
  EXPECT_TRUE(c.sentences[0].gold.empty());
  EXPECT_FALSE(c.sentences[0].is_title);
}

TEST(Corpus, Title) {
  auto c = parse_corpus_file("[t]great camera\n", "p");
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_TRUE(c.sentences[0].is_title);
  EXPECT_EQ(c.sentences[0].raw_text, "great camera");
  EXPECT_TRUE(c.sentences[0].gold.empty());
}

TEST(Corpus, ReviewIdsAndFlags) {
  auto c = parse_corpus_file(
      "*header line\n"
      "[t]first\n"
      "zoom[-1][u], size[+3][cc]##a\n"
      "[t]second\n"
      "##b\r\n",
      "p");
  ASSERT_EQ(c.sentences.size(), 4u);
  EXPECT_EQ(c.sentences[1].review_id, c.sentences[0].review_id);
  EXPECT_EQ(c.sentences[1].sentence_index, 1u);
  EXPECT_NE(c.sentences[2].review_id, c.sentences[1].review_id);
  EXPECT_EQ(c.sentences[3].raw_text, "b");
  const auto& g = c.sentences[1].gold;
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].strength, -1);
  EXPECT_TRUE(g[0].has(AnnotationFlag::Unlisted));
  EXPECT_TRUE(g[1].has(AnnotationFlag::Comparative));
  EXPECT_FALSE(g[1].has(AnnotationFlag::Unlisted));
}

TEST(Corpus, MalformedAnnotationWarns) {
  std::vector<ParseWarning> w;
  auto c = parse_corpus_file("zoom[+7]##text\nnot a sentence\n", "p", &w);
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_TRUE(c.sentences[0].gold.empty());
  EXPECT_EQ(c.sentences[0].raw_text, "text");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].line, 1u);
  EXPECT_EQ(w[1].line, 2u);
}

TEST(Corpus, SameBytesSameCorpus) {
  std::string src = "[t]x\nzoom[+1]##nice zoom\n";
  auto a = parse_corpus_file(src, "p");
  auto b = parse_corpus_file(src, "p");
  ASSERT_EQ(a.sentences.size(), b.sentences.size());
  for (std::size_t i = 0; i < a.sentences.size(); ++i)
    EXPECT_EQ(a.sentences[i].raw_text, b.sentences[i].raw_text);
}

TEST(Tokenize, Basic) {
  EXPECT_EQ(tokenize("sound is wonderful"),
            (std::vector<std::string>{"sound", "is", "wonderful"}));
  EXPECT_EQ(tokenize("it's razor-sharp."),
            (std::vector<std::string>{"it's", "razor", "-", "sharp", "."}));
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize("   \t ").empty());
}

TEST(Tokenize, KeepsCaseAndOffsets) {
  auto spans = tokenize_spans("Nice  Zoom!");
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0].text, "Nice");
  EXPECT_EQ(spans[1].text, "Zoom");
  EXPECT_EQ(spans[1].offset, 6u);
  EXPECT_EQ(spans[2].text, "!");
}

TEST(Tokenize, Utf8StaysWhole) {
  auto t = tokenize("caf\xc3\xa9 ok");
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], "caf\xc3\xa9");
}
