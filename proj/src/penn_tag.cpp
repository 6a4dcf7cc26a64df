#include "aspectminer/penn_tag.hpp"

#include <array>

namespace aspectminer {
namespace {

constexpr std::array<std::string_view, kPennTagCount> kLabels = {
    "CC",  "CD",   "DT",  "EX",  "FW",  "IN",   "JJ",   "JJR", "JJS", "LS",
    "MD",  "NN",   "NNS", "NNP", "NNPS", "PDT", "POS",  "PRP", "PRP$", "RB",
    "RBR", "RBS",  "RP",  "SYM", "TO",  "UH",   "VB",   "VBD", "VBG", "VBN",
    "VBP", "VBZ",  "WDT", "WP",  "WP$", "WRB",  "#",    "$",   ".",   ",",
    ":",   "(",    ")",   "``",  "''",  "-LRB-", "-RRB-", "HYPH",
};

constexpr std::array<PennTag, kPennTagCount> make_all() {
  std::array<PennTag, kPennTagCount> out{};
  for (std::size_t i = 0; i < kPennTagCount; ++i) out[i] = static_cast<PennTag>(i);
  return out;
}

constexpr auto kAll = make_all();

static_assert(static_cast<std::size_t>(PennTag::HYPH) + 1 == kPennTagCount);

}  // namespace

std::string_view to_string(PennTag tag) noexcept {
  return kLabels[static_cast<std::size_t>(tag)];
}

std::optional<PennTag> parse_penn_tag(std::string_view label) noexcept {
  for (std::size_t i = 0; i < kPennTagCount; ++i)
    if (kLabels[i] == label) return static_cast<PennTag>(i);
  return std::nullopt;
}

std::span<const PennTag> all_penn_tags() noexcept { return kAll; }

}  // namespace aspectminer
