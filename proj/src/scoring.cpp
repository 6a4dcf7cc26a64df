#include "aspectminer/scoring.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "aspectminer/error.hpp"
#include "text_util.hpp"

namespace aspectminer {
namespace {

bool is_consonant(char c) {
  return c >= 'a' && c <= 'z' && c != 'a' && c != 'e' && c != 'i' && c != 'o' &&
         c != 'u';
}

// "chatt" -> "chat"
std::optional<std::string> undouble(std::string_view stem) {
  auto n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && is_consonant(stem[n - 1]))
    return std::string(stem.substr(0, n - 1));
  return std::nullopt;
}

}  // namespace

std::vector<std::string> verb_base_candidates(std::string_view word) {
  using detail::ends_with;
  const std::string w = to_lower(word);
  const std::string_view v = w;
  const auto n = v.size();
  std::vector<std::string> out{w};
  auto add = [&](std::string s) {
    if (!s.empty() && std::find(out.begin(), out.end(), s) == out.end())
      out.push_back(std::move(s));
  };
  if (n > 3 && ends_with(v, "ies")) add(std::string(v.substr(0, n - 3)) + "y");
  if (n > 2 && ends_with(v, "es")) add(std::string(v.substr(0, n - 2)));
  if (n > 1 && ends_with(v, "s") && !ends_with(v, "ss"))
    add(std::string(v.substr(0, n - 1)));
  if (n > 3 && ends_with(v, "ied")) add(std::string(v.substr(0, n - 3)) + "y");
  if (n > 2 && ends_with(v, "ed")) {
    auto stem = v.substr(0, n - 2);
    add(std::string(stem));
    add(std::string(v.substr(0, n - 1)));
    if (auto u = undouble(stem)) add(*u);
  }
  if (n > 3 && ends_with(v, "ing")) {
    auto stem = v.substr(0, n - 3);
    add(std::string(stem));
    add(std::string(stem) + "e");
    if (auto u = undouble(stem)) add(*u);
  }
  return out;
}

SentenceScore weight_sentence(const TaggedSentence& sentence,
                              const TagWeightTable& weights,
                              const VerbCategoryLexicon& verbs) {
  SentenceScore score;
  score.sentence = sentence.source;
  for (const auto& tok : sentence.tokens) {
    score.adjective_adverb_points += weights.weight(tok.tag);
    if (!is_verb(tok.tag)) continue;
    for (const auto& base : verb_base_candidates(tok.surface)) {
      auto o = verbs.orientation(base);
      if (o == Polarity::None) continue;
      score.verb_points += o == Polarity::Positive ? 1 : -1;
      break;
    }
  }
  score.total = score.adjective_adverb_points + score.verb_points;
  return score;
}

std::vector<std::size_t> rank_sentences(std::vector<std::size_t> candidates,
                                        std::span<const SentenceScore> scores,
                                        std::size_t k) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (auto c : candidates)
    if (c >= scores.size())
      throw InvalidArgument("no score for sentence " + std::to_string(c));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a].total > scores[b].total;
                   });
  if (candidates.size() > k) candidates.resize(k);
  return candidates;
}

std::vector<std::size_t> select_top_sentences(const AspectGroup& group,
                                              std::span<const SentenceScore> scores,
                                              std::size_t k) {
  std::vector<std::size_t> candidates;
  for (const auto& p : group.pairs) candidates.push_back(p.sentence);
  return rank_sentences(std::move(candidates), scores, k);
}

}  // namespace aspectminer
