#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aspectminer/penn_tag.hpp"

namespace aspectminer {

struct Token {
  std::string surface;
  PennTag tag = PennTag::NN;
  std::size_t index = 0;

  bool operator==(const Token&) const = default;
};

struct TaggedSentence {
  std::vector<Token> tokens;
  std::size_t source = 0;  // ordinal of the ReviewSentence in its corpus

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  bool operator==(const TaggedSentence&) const = default;
};

// Parses one line of `word/TAG word/TAG ...`. The last '/' of each item is
// the delimiter. Unknown tags and items without '/' throw ParseError.
TaggedSentence parse_pretagged(std::string_view line, std::size_t source = 0);

// Inverse of parse_pretagged: `surface/TAG` joined by single spaces.
std::string render_pretagged(const TaggedSentence& sentence);

// Most-frequent-tag lexicon, case-sensitive keys.
class TagLexicon {
 public:
  TagLexicon() = default;

  // Lines are `word<TAB>TAG`; '#' starts a comment line.
  static TagLexicon parse(std::string_view content);
  static TagLexicon load(const std::string& path);

  void add(std::string word, PennTag tag);
  const PennTag* find(std::string_view word) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, PennTag, Hash, std::equal_to<>> entries_;
};

// Lexicon-and-suffix baseline tagger. Decision order per token:
//   1. lexicon (exact, then lowercased); all-digit numerals are CD
//   2. suffix rules: -ly RB, -est JJS, -er on an adjective stem JJR,
//      -ing VBG, -ed VBN after be/have else VBD, -s VBZ on verb stems else NNS
//   3. hyphen compound ending in an adjective: JJ
//   4. capitalized and not sentence-initial: NNP
//   5. NN
class BaselineTagger {
 public:
  explicit BaselineTagger(TagLexicon lexicon) : lexicon_(std::move(lexicon)) {}

  // Throws InvalidArgument("empty sentence") on an empty token list.
  TaggedSentence tag_sentence(std::span<const std::string> words,
                              std::size_t source = 0) const;

  // tokenize + hyphen-compound joining + tag_sentence. Returns an empty
  // sentence for text with no tokens.
  TaggedSentence tag_text(std::string_view raw_text,
                          std::size_t source = 0) const;

  const TagLexicon& lexicon() const noexcept { return lexicon_; }

 private:
  PennTag tag_word(std::string_view word, std::size_t position,
                   std::string_view previous) const;
  bool lexicon_has(std::string_view word, bool (*pred)(PennTag)) const;

  TagLexicon lexicon_;
};

// Joins `word - word` token runs written without spaces ("razor-sharp")
// into one token so the tagger can see the compound.
std::vector<std::string> join_hyphen_compounds(std::string_view raw_text);

}  // namespace aspectminer
