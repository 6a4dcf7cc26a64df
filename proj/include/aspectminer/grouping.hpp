#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "aspectminer/lexicons.hpp"
#include "aspectminer/patterns.hpp"

namespace aspectminer {

enum class HeadWord : std::uint8_t { First, Last };

struct AspectGroup {
  std::string canonical_label;
  std::set<std::string> members;
  std::vector<AspectOpinionPair> pairs;  // input order
};

struct GroupingOptions {
  HeadWord head = HeadWord::First;
  // Merge "photo" and "photos" when both occur as head words.
  bool merge_plurals = true;
};

// Unifies aspect surfaces that share a head word or a dictionary canonical
// term. Groups come back sorted by label.
std::vector<AspectGroup> group_aspects(std::span<const AspectOpinionPair> pairs,
                                       const AspectDictionary& dict,
                                       const GroupingOptions& options = {});

}  // namespace aspectminer
