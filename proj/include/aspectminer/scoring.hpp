#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aspectminer/grouping.hpp"
#include "aspectminer/lexicons.hpp"
#include "aspectminer/tagger.hpp"

namespace aspectminer {

struct SentenceScore {
  std::size_t sentence = 0;
  int adjective_adverb_points = 0;
  int verb_points = 0;
  int total = 0;
};

SentenceScore weight_sentence(const TaggedSentence& sentence,
                              const TagWeightTable& weights,
                              const VerbCategoryLexicon& verbs);

// Candidate base forms of an inflected verb, most literal first.
std::vector<std::string> verb_base_candidates(std::string_view word);

// Sentences that carry a pair of `group`, best first, at most k.
// `scores` is indexed by sentence ordinal.
std::vector<std::size_t> select_top_sentences(
    const AspectGroup& group, std::span<const SentenceScore> scores,
    std::size_t k);

// Same ordering over an explicit candidate list.
std::vector<std::size_t> rank_sentences(std::vector<std::size_t> candidates,
                                        std::span<const SentenceScore> scores,
                                        std::size_t k);

}  // namespace aspectminer
