#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace aspectminer {

// The closed Penn Treebank tag inventory, including punctuation tags.
enum class PennTag : std::uint8_t {
  CC, CD, DT, EX, FW, IN, JJ, JJR, JJS, LS, MD, NN, NNS, NNP, NNPS, PDT, POS,
  PRP, PRP_S, RB, RBR, RBS, RP, SYM, TO, UH, VB, VBD, VBG, VBN, VBP, VBZ,
  WDT, WP, WP_S, WRB,
  // punctuation
  Hash, Dollar, Period, Comma, Colon, LeftParen, RightParen, OpenQuote,
  CloseQuote, LRB, RRB, HYPH,
};

inline constexpr std::size_t kPennTagCount = 48;

// Canonical label as written in tagged text ("PRP$", "-LRB-", "``").
std::string_view to_string(PennTag tag) noexcept;

// Exact-match parse of a label; nullopt when the label is not a Penn tag.
std::optional<PennTag> parse_penn_tag(std::string_view label) noexcept;

std::span<const PennTag> all_penn_tags() noexcept;

constexpr bool is_noun(PennTag t) noexcept {
  return t == PennTag::NN || t == PennTag::NNS || t == PennTag::NNP ||
         t == PennTag::NNPS;
}

constexpr bool is_adjective(PennTag t) noexcept {
  return t == PennTag::JJ || t == PennTag::JJR || t == PennTag::JJS;
}

constexpr bool is_adverb(PennTag t) noexcept {
  return t == PennTag::RB || t == PennTag::RBR || t == PennTag::RBS;
}

constexpr bool is_verb(PennTag t) noexcept {
  return t == PennTag::VB || t == PennTag::VBD || t == PennTag::VBG ||
         t == PennTag::VBN || t == PennTag::VBP || t == PennTag::VBZ;
}

// Tags allowed at the opinion slot of a pattern.
constexpr bool is_opinion_tag(PennTag t) noexcept {
  return is_adjective(t) || is_adverb(t) || t == PennTag::VBD ||
         t == PennTag::VBG || t == PennTag::VBN;
}

}  // namespace aspectminer
