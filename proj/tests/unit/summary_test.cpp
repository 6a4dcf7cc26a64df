#include <gtest/gtest.h>

#include "aspectminer/error.hpp"
#include "aspectminer/summary.hpp"

using namespace aspectminer;

namespace {

AspectGroup group(std::string label, std::vector<Polarity> pols) {
  AspectGroup g;
  g.canonical_label = label;
  g.members.insert(label);
  std::size_t i = 0;
  for (auto p : pols) {
    AspectOpinionPair pair;
    pair.aspect_surface = label;
    pair.orientation = p;
    pair.sentence = i++;
    g.pairs.push_back(pair);
  }
  return g;
}

struct Fixture {
  std::vector<SentenceScore> scores;
  std::vector<std::string> texts;
  explicit Fixture(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      scores.push_back({i, int(i), 0, int(i)});
      texts.push_back("s" + std::to_string(i));
    }
  }
};

constexpr auto P = Polarity::Positive;
constexpr auto N = Polarity::Negative;

}  // namespace

TEST(Summary, CountsAndPercent) {
  Fixture f(4);
  std::vector<AspectGroup> g{group("camera", {P, P, P, N})};
  auto s = generate_summary("cam", g, f.scores, f.texts, 5);
  ASSERT_EQ(s.groups.size(), 1u);
  EXPECT_EQ(s.groups[0].positive_count, 3u);
  EXPECT_EQ(s.groups[0].negative_count, 1u);
  EXPECT_EQ(s.positive_pct, 75);
  EXPECT_EQ(s.negative_pct, 25);
  ASSERT_EQ(s.groups[0].pros.size(), 3u);
  EXPECT_EQ(s.groups[0].pros[0].sentence, 2u);  // highest weight first
  ASSERT_EQ(s.groups[0].cons.size(), 1u);
  EXPECT_EQ(s.groups[0].cons[0].text, "s3");
}

TEST(Summary, Empty) {
  Fixture f(0);
  auto s = generate_summary("cam", {}, f.scores, f.texts, 5);
  EXPECT_TRUE(s.groups.empty());
  EXPECT_EQ(s.positive_pct, 0);
  EXPECT_EQ(s.negative_pct, 0);
  EXPECT_EQ(render(s, SummaryFormat::Machine), "summary\tcam\t0\t0\t0\t0\n");
}

TEST(Summary, GroupOrder) {
  Fixture f(5);
  std::vector<AspectGroup> g{group("battery", {P, N}), group("camera", {P, P, P, P, N})};
  auto s = generate_summary("cam", g, f.scores, f.texts, 5);
  ASSERT_EQ(s.groups.size(), 2u);
  EXPECT_EQ(s.groups[0].label, "camera");
  EXPECT_EQ(s.groups[1].label, "battery");
}

TEST(Summary, TopK) {
  Fixture f(4);
  std::vector<AspectGroup> g{group("camera", {P, P, P, P})};
  auto s = generate_summary("cam", g, f.scores, f.texts, 2);
  EXPECT_EQ(s.groups[0].pros.size(), 2u);
  EXPECT_EQ(s.groups[0].positive_count, 4u);
}

TEST(Summary, MachineRecord) {
  Fixture f(4);
  std::vector<AspectGroup> g{group("camera", {P, P, P, N})};
  auto out = render(generate_summary("cam", g, f.scores, f.texts, 5), SummaryFormat::Machine);
  EXPECT_EQ(out.rfind("summary\tcam\t3\t1\t75\t25\n", 0), 0u);
  EXPECT_NE(out.find("\ngroup\tcamera\t3\t1\n"), std::string::npos);
  EXPECT_NE(out.find("\nsentence\tcamera\tnegative\t3\ts3\n"), std::string::npos);
}

TEST(Summary, HistogramBars) {
  Fixture f(4);
  std::vector<AspectGroup> g{group("camera", {P, P, P, N})};
  auto out = render(generate_summary("cam", g, f.scores, f.texts, 5),
                    SummaryFormat::Histogram);
  EXPECT_NE(out.find("overall + [" + std::string(38, '=') + std::string(12, ' ') + "] 75%"),
            std::string::npos)
      << out;
  EXPECT_NE(out.find("\n        - [" + std::string(13, '=') + std::string(37, ' ') + "] 25%"),
            std::string::npos)
      << out;
}

TEST(Summary, PercentHalfUp) {
  EXPECT_EQ(percent_half_up(1, 8), 13);  // 12.5
  EXPECT_EQ(percent_half_up(3, 8), 38);  // 37.5
  EXPECT_EQ(percent_half_up(1, 3), 33);
  EXPECT_EQ(percent_half_up(2, 3), 67);
  EXPECT_EQ(percent_half_up(0, 0), 0);
  EXPECT_EQ(percent_half_up(5, 5), 100);
}

TEST(Summary, Formats) {
  EXPECT_EQ(parse_summary_format("text"), SummaryFormat::Text);
  EXPECT_EQ(parse_summary_format("machine"), SummaryFormat::Machine);
  EXPECT_EQ(parse_summary_format("histogram"), SummaryFormat::Histogram);
  EXPECT_THROW(parse_summary_format("html"), InvalidArgument);
}
