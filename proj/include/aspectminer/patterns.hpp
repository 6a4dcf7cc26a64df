#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aspectminer/lexicons.hpp"
#include "aspectminer/penn_tag.hpp"
#include "aspectminer/tagger.hpp"

namespace aspectminer {

// A contiguous tag sequence with the positions of the aspect and opinion
// words. A pattern without an aspect slot takes its aspect from
// nearest_aspect_search around the opinion word.
struct TagPattern {
  std::vector<PennTag> tags;
  std::optional<std::size_t> aspect_offset;
  std::size_t opinion_offset = 0;
  std::string name;

  // Throws InvalidArgument when the role offsets or tags are inconsistent.
  void validate() const;
};

class PatternSet {
 public:
  PatternSet() = default;

  // One pattern per line: `NN:A VBZ RB JJ:O  # name=copula-adv`.
  static PatternSet parse(std::string_view content);
  static PatternSet load(const std::string& path);

  // The frequent-tag examples shipped with the library.
  static PatternSet defaults();

  void add(TagPattern pattern);

  const std::vector<TagPattern>& patterns() const noexcept {
    return patterns_;
  }
  std::size_t size() const noexcept { return patterns_.size(); }

 private:
  std::vector<TagPattern> patterns_;
};

std::string render_pattern(const TagPattern& pattern);

struct AspectOpinionPair {
  std::string aspect_surface;  // canonical term when known
  std::string aspect_text;     // the matched words as written
  std::string opinion_surface;
  Polarity orientation = Polarity::Positive;
  std::size_t sentence = 0;
  std::size_t aspect_index = 0;
  TermSpan aspect_span;
  std::size_t opinion_index = 0;
  std::string pattern_name;

  bool operator==(const AspectOpinionPair&) const = default;
};

struct ExtractionOptions {
  bool fallback_search = true;
  bool conjunction_expand = true;
};

// Every start index where `pattern.tags` occurs contiguously, ascending.
std::vector<std::size_t> match_pattern(const TaggedSentence& sentence,
                                       const TagPattern& pattern);

// Pattern-driven aspect/opinion pairing for one sentence. Pairs are ordered
// by (aspect_index, opinion_index); a position pair produced by several
// patterns keeps the first pattern in set order.
std::vector<AspectOpinionPair> extract_pairs(
    const TaggedSentence& sentence, const AspectDictionary& dict,
    const OpinionLexicon& lex, const PatternSet& patterns,
    const ExtractionOptions& options = {});

struct AspectHit {
  std::size_t index = 0;  // token where the search stopped
  TermSpan span;          // dictionary term or noun run around `index`

  bool operator==(const AspectHit&) const = default;
};

// Nearest dictionary term or noun to the opinion word, searching backwards
// first and then forwards.
std::optional<AspectHit> nearest_aspect_search(const TaggedSentence& sentence,
                                              std::size_t opinion_index,
                                              const AspectDictionary& dict);

// Adds a pair for `X and Y` when the aspect is followed by CC and a noun.
// Only one conjunct is followed.
std::vector<AspectOpinionPair> conjunction_expand(
    const AspectOpinionPair& pair, const TaggedSentence& sentence,
    const AspectDictionary& dict);

struct MinedPattern {
  std::vector<PennTag> tags;
  std::size_t support = 0;
  double support_ratio = 0.0;

  bool operator==(const MinedPattern&) const = default;
};

// Levelwise mining of contiguous tag n-grams (2 <= n <= max_len) present in
// at least `min_support` sentences. Sorted by support desc, length desc,
// then tag order.
std::vector<MinedPattern> mine_frequent_tag_sets(
    std::span<const TaggedSentence> sentences, std::size_t min_support,
    std::size_t max_len);

}  // namespace aspectminer
