#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aspectminer/penn_tag.hpp"
#include "aspectminer/tagger.hpp"

namespace aspectminer {

enum class Polarity : std::uint8_t { None, Positive, Negative };

std::string_view to_string(Polarity p) noexcept;

std::string to_lower(std::string_view s);

// Positive and negative seed lists. The two sets are disjoint.
class OpinionLexicon {
 public:
  OpinionLexicon() = default;

  // One word per line; ';' and '#' start comment lines. Throws ParseError
  // naming every word that appears in both lists.
  static OpinionLexicon parse(std::string_view positive_content,
                              std::string_view negative_content);
  static OpinionLexicon load(const std::string& positive_file,
                             const std::string& negative_file);

  Polarity polarity(std::string_view word) const;

  const std::set<std::string, std::less<>>& positive() const noexcept {
    return positive_;
  }
  const std::set<std::string, std::less<>>& negative() const noexcept {
    return negative_;
  }

 private:
  std::set<std::string, std::less<>> positive_;
  std::set<std::string, std::less<>> negative_;
};

inline Polarity polarity(std::string_view word, const OpinionLexicon& lex) {
  return lex.polarity(word);
}

enum class AspectSource : std::uint8_t { Specification, Synonym };

struct TermSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  std::size_t size() const noexcept { return end - begin; }
  bool operator==(const TermSpan&) const = default;
};

// Known aspect terms (possibly multi-word) mapped to canonical terms.
class AspectDictionary {
 public:
  struct Entry {
    std::string canonical;
    AspectSource source = AspectSource::Specification;
  };

  AspectDictionary() = default;

  // Specification terms: one canonical term per line. Synonyms:
  // `canonical: a, b, c`.
  static AspectDictionary parse(std::string_view spec_content,
                                std::string_view synonym_content);
  static AspectDictionary load(const std::string& spec_file,
                               const std::string& synonym_file);

  // Canonical term for `term` (lowercased, whitespace-normalized).
  std::optional<std::string> lookup(std::string_view term) const;
  const Entry* find(std::string_view term) const;

  // Token count of the longest term starting at `start`, 0 when none.
  std::size_t longest_match_at(const TaggedSentence& sentence,
                               std::size_t start) const;

  // Longest term that covers token `index` (earliest start on ties).
  std::optional<TermSpan> covering_term(const TaggedSentence& sentence,
                                        std::size_t index) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::string, Entry, std::less<>>& entries() const noexcept {
    return entries_;
  }

 private:
  void add(const std::string& term, Entry entry);

  std::map<std::string, Entry, std::less<>> entries_;
  std::size_t max_words_ = 0;
};

struct VerbCategory {
  std::string name;
  Polarity orientation = Polarity::Positive;
  std::set<std::string> verbs;
};

class VerbCategoryLexicon {
 public:
  VerbCategoryLexicon() = default;

  // Lines are `category<TAB>orientation<TAB>verb,verb,...`.
  static VerbCategoryLexicon parse(std::string_view content);
  static VerbCategoryLexicon load(const std::string& path);

  // The verb categories of the reference weighting table.
  static VerbCategoryLexicon defaults();

  // Orientation of a base-form verb; None when uncategorized.
  Polarity orientation(std::string_view base_form) const;

  const std::vector<VerbCategory>& categories() const noexcept {
    return categories_;
  }

 private:
  void add(VerbCategory category);

  std::vector<VerbCategory> categories_;
  std::map<std::string, Polarity, std::less<>> by_verb_;
};

// Integer weight per tag. Defaults: JJ 1, JJR 2, JJS 3, RB 1, RBR 2, RBS 3.
class TagWeightTable {
 public:
  TagWeightTable();

  int weight(PennTag tag) const noexcept {
    return weights_[static_cast<std::size_t>(tag)];
  }
  void set(PennTag tag, int weight);

 private:
  std::array<int, kPennTagCount> weights_{};
};

}  // namespace aspectminer
