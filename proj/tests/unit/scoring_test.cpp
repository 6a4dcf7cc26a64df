#include <gtest/gtest.h>

#include "aspectminer/error.hpp"
#include "aspectminer/scoring.hpp"
#include "test_support.hpp"

using namespace aspectminer;
using aspectminer::testing::tagged;

namespace {

std::vector<SentenceScore> totals(std::vector<int> t) {
  std::vector<SentenceScore> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back({i, t[i], 0, t[i]});
  return out;
}

}  // namespace

TEST(Scoring, EarpieceWeighsTwo) {
  auto s = weight_sentence(tagged("earpiece/NN is/VBZ very/RB comfortable/JJ"),
                           TagWeightTable{}, VerbCategoryLexicon::defaults());
  EXPECT_EQ(s.total, 2);
  EXPECT_EQ(s.adjective_adverb_points, 2);
  EXPECT_EQ(s.verb_points, 0);
}

TEST(Scoring, EmptyVerbLexicon) {
  auto s = weight_sentence(tagged("camera/NN works/VBZ"), TagWeightTable{},
                           VerbCategoryLexicon{});
  EXPECT_EQ(s.total, 0);
}

TEST(Scoring, NegativeVerbCancels) {
  auto s = weight_sentence(tagged("they/PRP warn/VBP about/IN the/DT awful/JJ battery/NN"),
                           TagWeightTable{}, VerbCategoryLexicon::defaults());
  EXPECT_EQ(s.adjective_adverb_points, 1);
  EXPECT_EQ(s.verb_points, -1);
  EXPECT_EQ(s.total, 0);
}

TEST(Scoring, InflectedVerbs) {
  auto v = VerbCategoryLexicon::defaults();
  TagWeightTable w;
  EXPECT_EQ(weight_sentence(tagged("he/PRP warned/VBD us/PRP"), w, v).verb_points, -1);
  EXPECT_EQ(weight_sentence(tagged("it/PRP warns/VBZ"), w, v).verb_points, -1);
  EXPECT_EQ(weight_sentence(tagged("telling/VBG"), w, v).verb_points, 1);
}

TEST(Scoring, GradedAdjectives) {
  auto s = weight_sentence(tagged("the/DT best/JJS and/CC faster/JJR camera/NN"),
                           TagWeightTable{}, VerbCategoryLexicon{});
  EXPECT_EQ(s.total, 5);
}

TEST(Scoring, BaseCandidates) {
  auto c = verb_base_candidates("warned");
  EXPECT_NE(std::find(c.begin(), c.end(), "warn"), c.end());
  c = verb_base_candidates("tells");
  EXPECT_NE(std::find(c.begin(), c.end(), "tell"), c.end());
  EXPECT_EQ(verb_base_candidates("warn").front(), "warn");
}

TEST(Selection, ByTotalThenOrder) {
  auto s = totals({3, 1, 3});
  EXPECT_EQ(rank_sentences({0, 1, 2}, s, 2), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(rank_sentences({0, 1, 2}, s, 10), (std::vector<std::size_t>{0, 2, 1}));
  auto flat = totals({1, 1, 1, 1});
  EXPECT_EQ(rank_sentences({3, 1, 2, 0}, flat, 2), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(rank_sentences({0}, s, 0), InvalidArgument);
}

TEST(Selection, FromGroupDeduplicates) {
  AspectGroup g;
  g.canonical_label = "x";
  for (std::size_t sent : {2, 0, 2}) {
    AspectOpinionPair p;
    p.sentence = sent;
    g.pairs.push_back(p);
  }
  auto s = totals({1, 5, 4});
  EXPECT_EQ(select_top_sentences(g, s, 5), (std::vector<std::size_t>{2, 0}));
}
