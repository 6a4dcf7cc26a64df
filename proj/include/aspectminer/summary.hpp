#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aspectminer/grouping.hpp"
#include "aspectminer/scoring.hpp"

namespace aspectminer {

struct SummarySentence {
  std::size_t sentence = 0;
  int weight = 0;
  std::string text;
};

struct SummaryGroup {
  std::string label;
  std::vector<SummarySentence> pros;
  std::vector<SummarySentence> cons;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
};

struct Summary {
  std::string product_name;
  std::vector<SummaryGroup> groups;
  int positive_pct = 0;
  int negative_pct = 0;
};

// `sentence_texts` and `scores` are indexed by sentence ordinal.
Summary generate_summary(std::string product_name,
                         std::span<const AspectGroup> groups,
                         std::span<const SentenceScore> scores,
                         std::span<const std::string> sentence_texts,
                         std::size_t k);

enum class SummaryFormat : std::uint8_t { Text, Machine, Histogram };

// Throws InvalidArgument for an unknown name.
SummaryFormat parse_summary_format(std::string_view name);

std::string render(const Summary& summary, SummaryFormat format);

// round(100 * part / whole), halves rounded up; 0 when whole is 0.
int percent_half_up(std::size_t part, std::size_t whole);

inline constexpr int kHistogramWidth = 50;

}  // namespace aspectminer
