#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aspectminer {

// Qualifiers that may follow an annotation in the review corpus.
enum class AnnotationFlag : std::uint8_t {
  Unlisted = 1 << 0,       // [u] aspect not named in the sentence
  Pronoun = 1 << 1,        // [p] aspect referred to by pronoun
  Suggestion = 1 << 2,     // [s]
  Comparative = 1 << 3,    // [cc]
  ComparativeSame = 1 << 4 // [cs]
};

struct GoldAnnotation {
  std::string aspect_term;
  int strength = 0;  // [-3..+3], never 0
  std::uint8_t flags = 0;

  bool has(AnnotationFlag f) const noexcept {
    return (flags & static_cast<std::uint8_t>(f)) != 0;
  }
};

struct ReviewSentence {
  std::size_t review_id = 0;
  std::size_t sentence_index = 0;
  std::string raw_text;
  std::vector<GoldAnnotation> gold;
  bool is_title = false;
};

struct Corpus {
  std::string product_name;
  std::vector<ReviewSentence> sentences;
};

struct ParseWarning {
  std::size_t line = 0;  // 1-based
  std::string message;
};

// Parses a review file in the annotated line format
//
//   [t]<title>
//   term[+2][u], other term[-1]##<sentence>
//   ##<sentence>
//
// Each `[t]` line opens a new review. Lines matching none of the forms
// (file headers, blank lines) are skipped. A line whose annotations are
// malformed is kept with empty gold and reported through `warnings`.
Corpus parse_corpus_file(std::string_view content, std::string product_name,
                         std::vector<ParseWarning>* warnings = nullptr);

struct TokenSpan {
  std::string text;
  std::size_t offset = 0;  // byte offset into the source text
};

// Splits text into maximal runs of letters, digits and apostrophes; every
// other non-space character becomes a token of its own. Bytes >= 0x80 are
// treated as letters so UTF-8 sequences stay intact. Case is preserved.
std::vector<TokenSpan> tokenize_spans(std::string_view text);
std::vector<std::string> tokenize(std::string_view text);

}  // namespace aspectminer
