#include "aspectminer/lexicons.hpp"

#include <algorithm>

#include "aspectminer/error.hpp"
#include "text_util.hpp"

namespace aspectminer {

using detail::trim;

std::string_view to_string(Polarity p) noexcept {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::None: break;
  }
  return "none";
}

namespace {

bool is_comment(std::string_view line) {
  return line.empty() || line.front() == '#' || line.front() == ';';
}

std::set<std::string, std::less<>> read_word_list(std::string_view content) {
  std::set<std::string, std::less<>> words;
  for (auto line : detail::split_lines(content)) {
    line = trim(line);
    if (is_comment(line)) continue;
    words.insert(to_lower(line));
  }
  return words;
}

}  // namespace

OpinionLexicon OpinionLexicon::parse(std::string_view positive_content,
                                     std::string_view negative_content) {
  OpinionLexicon lex;
  lex.positive_ = read_word_list(positive_content);
  lex.negative_ = read_word_list(negative_content);
  std::vector<std::string> both;
  std::set_intersection(lex.positive_.begin(), lex.positive_.end(),
                        lex.negative_.begin(), lex.negative_.end(),
                        std::back_inserter(both));
  if (!both.empty()) {
    std::string msg = "words in both positive and negative lists:";
    for (const auto& w : both) msg += " " + w;
    throw ParseError(msg);
  }
  return lex;
}

OpinionLexicon OpinionLexicon::load(const std::string& positive_file,
                                    const std::string& negative_file) {
  return parse(read_file(positive_file), read_file(negative_file));
}

Polarity OpinionLexicon::polarity(std::string_view word) const {
  const std::string lower = to_lower(word);
  if (positive_.count(lower)) return Polarity::Positive;
  if (negative_.count(lower)) return Polarity::Negative;
  return Polarity::None;
}

// ---------------------------------------------------------------------------

void AspectDictionary::add(const std::string& term, Entry entry) {
  auto words = detail::split_whitespace(term).size();
  max_words_ = std::max(max_words_, words);
  entries_.insert_or_assign(term, std::move(entry));
}

AspectDictionary AspectDictionary::parse(std::string_view spec_content,
                                         std::string_view synonym_content) {
  AspectDictionary dict;
  for (auto line : detail::split_lines(spec_content)) {
    line = trim(line);
    if (is_comment(line)) continue;
    auto term = detail::normalize_term(line);
    dict.add(term, {term, AspectSource::Specification});
  }

  auto lines = detail::split_lines(synonym_content);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = trim(lines[ln]);
    if (is_comment(line)) continue;
    auto where = "synonym line " + std::to_string(ln + 1) + ": ";
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(where + "expected 'canonical: synonym, ...'");
    auto canonical = detail::normalize_term(line.substr(0, colon));
    const Entry* target = dict.find(canonical);
    if (!target || target->source != AspectSource::Specification ||
        target->canonical != canonical)
      throw ParseError(where + "unknown canonical term '" + canonical + "'");
    for (auto part : detail::split(line.substr(colon + 1), ',')) {
      auto synonym = detail::normalize_term(part);
      if (synonym.empty()) continue;
      if (const Entry* existing = dict.find(synonym)) {
        if (existing->canonical != canonical)
          throw ParseError(where + "'" + synonym + "' already maps to '" +
                           existing->canonical + "'");
        continue;
      }
      dict.add(synonym, {canonical, AspectSource::Synonym});
    }
  }
  return dict;
}

AspectDictionary AspectDictionary::load(const std::string& spec_file,
                                        const std::string& synonym_file) {
  return parse(read_file(spec_file), read_file(synonym_file));
}

const AspectDictionary::Entry* AspectDictionary::find(std::string_view term) const {
  auto it = entries_.find(term);
  return it == entries_.end() ? nullptr : &it->second;
}

std::optional<std::string> AspectDictionary::lookup(std::string_view term) const {
  const Entry* e = find(detail::normalize_term(term));
  if (!e) return std::nullopt;
  return e->canonical;
}

std::size_t AspectDictionary::longest_match_at(const TaggedSentence& sentence,
                                               std::size_t start) const {
  const auto n = sentence.size();
  if (start >= n || entries_.empty()) return 0;
  const auto limit = std::min(max_words_, n - start);
  std::string key;
  std::size_t best = 0;
  for (std::size_t len = 1; len <= limit; ++len) {
    if (len > 1) key += ' ';
    key += to_lower(sentence.tokens[start + len - 1].surface);
    if (entries_.find(key) != entries_.end()) best = len;
  }
  return best;
}

std::optional<TermSpan> AspectDictionary::covering_term(
    const TaggedSentence& sentence, std::size_t index) const {
  if (index >= sentence.size() || max_words_ == 0) return std::nullopt;
  std::optional<TermSpan> best;
  const std::size_t first = index + 1 >= max_words_ ? index + 1 - max_words_ : 0;
  for (std::size_t start = first; start <= index; ++start) {
    auto len = longest_match_at(sentence, start);
    if (len == 0 || start + len <= index) continue;
    if (!best || len > best->size()) best = TermSpan{start, start + len};
  }
  return best;
}

// ---------------------------------------------------------------------------

void VerbCategoryLexicon::add(VerbCategory category) {
  for (const auto& verb : category.verbs) {
    auto [it, inserted] = by_verb_.emplace(verb, category.orientation);
    if (!inserted && it->second != category.orientation)
      throw ParseError("verb '" + verb + "' has both orientations");
  }
  categories_.push_back(std::move(category));
}

VerbCategoryLexicon VerbCategoryLexicon::parse(std::string_view content) {
  VerbCategoryLexicon lex;
  auto lines = detail::split_lines(content);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    if (is_comment(trim(line))) continue;
    auto where = "verb category line " + std::to_string(ln + 1) + ": ";
    auto fields = detail::split(line, '\t');
    if (fields.size() != 3)
      throw ParseError(where + "expected category<TAB>orientation<TAB>verbs");
    VerbCategory cat;
    cat.name = std::string(trim(fields[0]));
    auto orientation = to_lower(trim(fields[1]));
    if (orientation == "positive") cat.orientation = Polarity::Positive;
    else if (orientation == "negative") cat.orientation = Polarity::Negative;
    else throw ParseError(where + "orientation must be positive or negative");
    for (auto v : detail::split(fields[2], ',')) {
      auto verb = to_lower(trim(v));
      if (!verb.empty()) cat.verbs.insert(std::move(verb));
    }
    lex.add(std::move(cat));
  }
  return lex;
}

VerbCategoryLexicon VerbCategoryLexicon::load(const std::string& path) {
  return parse(read_file(path));
}

VerbCategoryLexicon VerbCategoryLexicon::defaults() {
  VerbCategoryLexicon lex;
  lex.add({"tell", Polarity::Positive, {"tell"}});
  lex.add({"chitchat", Polarity::Positive, {"argue", "chatter", "gab"}});
  lex.add({"advise", Polarity::Positive, {"advise", "instruct"}});
  lex.add({"advise", Polarity::Negative, {"admonish", "caution", "warn"}});
  return lex;
}

Polarity VerbCategoryLexicon::orientation(std::string_view base_form) const {
  auto it = by_verb_.find(base_form);
  return it == by_verb_.end() ? Polarity::None : it->second;
}

// ---------------------------------------------------------------------------

TagWeightTable::TagWeightTable() {
  set(PennTag::JJ, 1);
  set(PennTag::JJR, 2);
  set(PennTag::JJS, 3);
  set(PennTag::RB, 1);
  set(PennTag::RBR, 2);
  set(PennTag::RBS, 3);
}

void TagWeightTable::set(PennTag tag, int weight) {
  if (weight < 0) throw InvalidArgument("tag weights must be non-negative");
  weights_[static_cast<std::size_t>(tag)] = weight;
}

}  // namespace aspectminer
