#include "aspectminer/patterns.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "aspectminer/error.hpp"
#include "text_util.hpp"

namespace aspectminer {

void TagPattern::validate() const {
  const auto n = tags.size();
  if (n < 2 || n > 6)
    throw InvalidArgument("pattern '" + name + "' must have 2..6 tags");
  if (opinion_offset >= n)
    throw InvalidArgument("pattern '" + name + "' opinion offset out of range");
  if (!is_opinion_tag(tags[opinion_offset]))
    throw InvalidArgument("pattern '" + name + "' opinion slot tag " +
                          std::string(to_string(tags[opinion_offset])) +
                          " cannot carry an opinion");
  if (aspect_offset) {
    if (*aspect_offset >= n)
      throw InvalidArgument("pattern '" + name + "' aspect offset out of range");
    if (*aspect_offset == opinion_offset)
      throw InvalidArgument("pattern '" + name +
                            "' aspect and opinion share a slot");
    if (!is_noun(tags[*aspect_offset]))
      throw InvalidArgument("pattern '" + name + "' aspect slot must be a noun");
  }
}

std::string render_pattern(const TagPattern& pattern) {
  std::string out;
  for (std::size_t i = 0; i < pattern.tags.size(); ++i) {
    if (i) out += ' ';
    out += to_string(pattern.tags[i]);
    if (pattern.aspect_offset == i) out += ":A";
    if (pattern.opinion_offset == i) out += ":O";
  }
  return out;
}

void PatternSet::add(TagPattern pattern) {
  pattern.validate();
  for (const auto& p : patterns_)
    if (p.tags == pattern.tags && p.aspect_offset == pattern.aspect_offset &&
        p.opinion_offset == pattern.opinion_offset)
      throw InvalidArgument("duplicate pattern '" + render_pattern(pattern) + "'");
  if (pattern.name.empty()) pattern.name = render_pattern(pattern);
  patterns_.push_back(std::move(pattern));
}

PatternSet PatternSet::parse(std::string_view content) {
  PatternSet set;
  auto lines = detail::split_lines(content);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    auto where = "pattern line " + std::to_string(ln + 1) + ": ";
    std::string name;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      for (auto item : detail::split_whitespace(line.substr(hash + 1)))
        if (detail::starts_with(item, "name="))
          name = std::string(item.substr(5));
      line = line.substr(0, hash);
    }
    auto items = detail::split_whitespace(line);
    if (items.empty()) continue;

    TagPattern p;
    p.name = std::move(name);
    bool has_opinion = false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto item = items[i];
      char role = 0;
      if (item.size() > 2 && item[item.size() - 2] == ':' &&
          (item.back() == 'A' || item.back() == 'O')) {
        role = item.back();
        item.remove_suffix(2);
      }
      auto tag = parse_penn_tag(item);
      if (!tag) throw ParseError(where + "unknown tag '" + std::string(item) + "'");
      p.tags.push_back(*tag);
      if (role == 'A') {
        if (p.aspect_offset) throw ParseError(where + "more than one :A");
        p.aspect_offset = i;
      } else if (role == 'O') {
        if (has_opinion) throw ParseError(where + "more than one :O");
        p.opinion_offset = i;
        has_opinion = true;
      }
    }
    if (!has_opinion) throw ParseError(where + "missing :O role");
    try {
      set.add(std::move(p));
    } catch (const InvalidArgument& e) {
      throw ParseError(where + e.what());
    }
  }
  return set;
}

PatternSet PatternSet::load(const std::string& path) {
  return parse(read_file(path));
}

PatternSet PatternSet::defaults() {
  using T = PennTag;
  PatternSet set;
  // Longest first: list order is match precedence.
  set.add({{T::RB, T::JJ, T::TO, T::VB, T::DT, T::NN}, 5, 1, "adverb-adjective-to-verb-noun"});
  set.add({{T::NN, T::VBZ, T::RB, T::JJ}, 0, 3, "noun-is-adverb-adjective"});
  set.add({{T::JJ, T::NN, T::IN, T::NN}, 3, 0, "adjective-noun-of-noun"});
  set.add({{T::JJ, T::NN, T::CC, T::NN}, 1, 0, "adjective-noun-and-noun"});
  set.add({{T::NNS, T::VBP, T::JJ}, 0, 2, "plural-are-adjective"});
  set.add({{T::NN, T::VBZ, T::JJ}, 0, 2, "noun-is-adjective"});
  set.add({{T::NNS, T::VBP, T::RB}, 0, 2, "plural-are-adverb"});
  set.add({{T::VBZ, T::JJ}, std::nullopt, 1, "verb-adjective"});
  set.add({{T::VBD, T::NN}, 1, 0, "past-verb-noun"});
  set.add({{T::VBN, T::NN}, 1, 0, "participle-noun"});
  set.add({{T::JJ, T::VBG}, std::nullopt, 0, "adjective-gerund"});
  return set;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> match_pattern(const TaggedSentence& sentence,
                                       const TagPattern& pattern) {
  std::vector<std::size_t> starts;
  const auto n = sentence.size();
  const auto m = pattern.tags.size();
  if (m == 0 || m > n) return starts;
  for (std::size_t s = 0; s + m <= n; ++s) {
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k)
      ok = sentence.tokens[s + k].tag == pattern.tags[k];
    if (ok) starts.push_back(s);
  }
  return starts;
}

namespace {

// The dictionary term covering `index`, else the noun run around it clipped
// to [lo, hi).
TermSpan aspect_span_at(const TaggedSentence& sentence, std::size_t index,
                        const AspectDictionary& dict, std::size_t lo,
                        std::size_t hi) {
  if (auto term = dict.covering_term(sentence, index);
      term && term->begin >= lo && term->end <= hi)
    return *term;
  TermSpan span{index, index + 1};
  if (!is_noun(sentence.tokens[index].tag)) return span;
  while (span.begin > lo && is_noun(sentence.tokens[span.begin - 1].tag))
    --span.begin;
  while (span.end < hi && is_noun(sentence.tokens[span.end].tag)) ++span.end;
  return span;
}

std::string span_text(const TaggedSentence& sentence, TermSpan span) {
  std::string out;
  for (auto i = span.begin; i < span.end; ++i) {
    if (i > span.begin) out += ' ';
    out += to_lower(sentence.tokens[i].surface);
  }
  return out;
}

AspectOpinionPair make_pair(const TaggedSentence& sentence,
                            const AspectDictionary& dict, std::size_t aspect_index,
                            TermSpan span, std::size_t opinion_index,
                            Polarity orientation, std::string pattern_name) {
  AspectOpinionPair pair;
  pair.aspect_text = span_text(sentence, span);
  pair.aspect_surface = dict.lookup(pair.aspect_text).value_or(pair.aspect_text);
  pair.opinion_surface = sentence.tokens[opinion_index].surface;
  pair.orientation = orientation;
  pair.sentence = sentence.source;
  pair.aspect_index = aspect_index;
  pair.aspect_span = span;
  pair.opinion_index = opinion_index;
  pair.pattern_name = std::move(pattern_name);
  return pair;
}

bool is_aspect_candidate(const TaggedSentence& sentence, std::size_t j,
                         std::size_t opinion_index, const AspectDictionary& dict) {
  if (is_noun(sentence.tokens[j].tag)) return true;
  auto term = dict.covering_term(sentence, j);
  return term && !(term->begin <= opinion_index && opinion_index < term->end);
}

}  // namespace

std::optional<AspectHit> nearest_aspect_search(const TaggedSentence& sentence,
                                               std::size_t opinion_index,
                                               const AspectDictionary& dict) {
  const auto n = sentence.size();
  if (opinion_index >= n) return std::nullopt;
  for (std::size_t j = opinion_index; j-- > 0;)
    if (is_aspect_candidate(sentence, j, opinion_index, dict))
      return AspectHit{j, aspect_span_at(sentence, j, dict, 0, opinion_index)};
  for (std::size_t j = opinion_index + 1; j < n; ++j)
    if (is_aspect_candidate(sentence, j, opinion_index, dict))
      return AspectHit{j, aspect_span_at(sentence, j, dict, opinion_index + 1, n)};
  return std::nullopt;
}

std::vector<AspectOpinionPair> conjunction_expand(const AspectOpinionPair& pair,
                                                  const TaggedSentence& sentence,
                                                  const AspectDictionary& dict) {
  std::vector<AspectOpinionPair> out{pair};
  const auto n = sentence.size();
  const auto cc = pair.aspect_span.end;
  if (cc + 1 >= n || sentence.tokens[cc].tag != PennTag::CC ||
      !is_noun(sentence.tokens[cc + 1].tag))
    return out;
  TermSpan span{cc + 1, cc + 2};
  if (auto len = dict.longest_match_at(sentence, cc + 1); len > 0) {
    span.end = cc + 1 + len;
  } else {
    while (span.end < n && is_noun(sentence.tokens[span.end].tag) &&
           span.end != pair.opinion_index)
      ++span.end;
  }
  out.push_back(make_pair(sentence, dict, span.end - 1, span, pair.opinion_index,
                          pair.orientation, pair.pattern_name + "+conjunction"));
  return out;
}

std::vector<AspectOpinionPair> extract_pairs(const TaggedSentence& sentence,
                                             const AspectDictionary& dict,
                                             const OpinionLexicon& lex,
                                             const PatternSet& patterns,
                                             const ExtractionOptions& options) {
  std::vector<AspectOpinionPair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto emit = [&](AspectOpinionPair pair) {
    if (seen.emplace(pair.aspect_index, pair.opinion_index).second)
      pairs.push_back(std::move(pair));
  };

  bool any_match = false;
  for (const auto& pattern : patterns.patterns()) {
    for (auto start : match_pattern(sentence, pattern)) {
      any_match = true;
      const auto op = start + pattern.opinion_offset;
      const auto orientation = lex.polarity(sentence.tokens[op].surface);
      if (orientation == Polarity::None) continue;
      std::size_t ai;
      TermSpan span;
      if (pattern.aspect_offset) {
        ai = start + *pattern.aspect_offset;
        // Keep the aspect span on its own side of the opinion word.
        auto lo = ai < op ? 0 : op + 1;
        auto hi = ai < op ? op : sentence.size();
        span = aspect_span_at(sentence, ai, dict, lo, hi);
      } else {
        auto hit = nearest_aspect_search(sentence, op, dict);
        if (!hit) continue;
        ai = hit->index;
        span = hit->span;
      }
      auto pair = make_pair(sentence, dict, ai, span, op, orientation, pattern.name);
      if (options.conjunction_expand) {
        for (auto& p : conjunction_expand(pair, sentence, dict)) emit(std::move(p));
      } else {
        emit(std::move(pair));
      }
    }
  }

  if (!any_match && options.fallback_search) {
    for (std::size_t op = 0; op < sentence.size(); ++op) {
      const auto& tok = sentence.tokens[op];
      if (!is_opinion_tag(tok.tag)) continue;
      const auto orientation = lex.polarity(tok.surface);
      if (orientation == Polarity::None) continue;
      if (auto hit = nearest_aspect_search(sentence, op, dict))
        emit(make_pair(sentence, dict, hit->index, hit->span, op, orientation,
                       "nearest-aspect"));
    }
  }

  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return std::pair(a.aspect_index, a.opinion_index) <
           std::pair(b.aspect_index, b.opinion_index);
  });
  return pairs;
}

}  // namespace aspectminer
