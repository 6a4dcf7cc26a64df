#include "aspectminer/tagger.hpp"

#include <array>
#include <cctype>

#include "aspectminer/corpus.hpp"
#include "aspectminer/error.hpp"
#include "aspectminer/lexicons.hpp"
#include "text_util.hpp"

namespace aspectminer {

using detail::ends_with;

TaggedSentence parse_pretagged(std::string_view line, std::size_t source) {
  TaggedSentence out;
  out.source = source;
  auto items = detail::split_whitespace(line);
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto item = items[i];
    auto slash = item.rfind('/');
    if (slash == std::string_view::npos)
      throw ParseError("item " + std::to_string(i) + " '" + std::string(item) +
                       "' has no '/' tag delimiter");
    if (slash == 0)
      throw ParseError("item " + std::to_string(i) + " '" + std::string(item) +
                       "' has an empty word");
    auto tag = parse_penn_tag(item.substr(slash + 1));
    if (!tag)
      throw ParseError("item " + std::to_string(i) + " '" + std::string(item) +
                       "' has unknown tag '" +
                       std::string(item.substr(slash + 1)) + "'");
    out.tokens.push_back({std::string(item.substr(0, slash)), *tag, i});
  }
  return out;
}

std::string render_pretagged(const TaggedSentence& sentence) {
  std::string out;
  for (const auto& t : sentence.tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface;
    out += '/';
    out += to_string(t.tag);
  }
  return out;
}

TagLexicon TagLexicon::parse(std::string_view content) {
  TagLexicon lex;
  auto lines = detail::split_lines(content);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("tag lexicon line " + std::to_string(ln + 1) +
                       ": expected word<TAB>TAG");
    auto word = line.substr(0, tab);
    auto label = detail::trim(line.substr(tab + 1));
    auto tag = parse_penn_tag(label);
    if (word.empty() || !tag)
      throw ParseError("tag lexicon line " + std::to_string(ln + 1) +
                       ": bad entry '" + std::string(line) + "'");
    lex.add(std::string(word), *tag);
  }
  return lex;
}

TagLexicon TagLexicon::load(const std::string& path) {
  return parse(read_file(path));
}

void TagLexicon::add(std::string word, PennTag tag) {
  entries_.try_emplace(std::move(word), tag);
}

const PennTag* TagLexicon::find(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_numeral(std::string_view w) {
  bool digit = false;
  for (char c : w) {
    if (is_digit(c)) digit = true;
    else if (c != '.' && c != ',') return false;
  }
  return digit;
}

bool is_base_verb(PennTag t) { return t == PennTag::VB || t == PennTag::VBP; }

constexpr std::array<std::string_view, 16> kAuxiliaries = {
    "is",   "are", "was",  "were", "be",  "been", "being", "am",
    "has",  "have", "had", "'s",   "'re", "get",  "got",   "gets"};

bool is_auxiliary(std::string_view w) {
  for (auto a : kAuxiliaries)
    if (a == w) return true;
  return false;
}

}  // namespace

bool BaselineTagger::lexicon_has(std::string_view word,
                                 bool (*pred)(PennTag)) const {
  if (word.empty()) return false;
  const PennTag* t = lexicon_.find(word);
  return t && pred(*t);
}

PennTag BaselineTagger::tag_word(std::string_view word, std::size_t position,
                                 std::string_view previous) const {
  if (const PennTag* t = lexicon_.find(word)) return *t;
  const std::string lower = to_lower(word);
  if (const PennTag* t = lexicon_.find(lower)) return *t;
  if (is_numeral(word)) return PennTag::CD;

  const std::string_view w = lower;
  const auto n = w.size();
  if (n >= 4 && ends_with(w, "ly")) return PennTag::RB;
  if (n >= 5 && ends_with(w, "est")) return PennTag::JJS;
  if (n >= 4 && ends_with(w, "er")) {
    auto stem = w.substr(0, n - 2);
    std::string y_stem = std::string(w.substr(0, n - 3)) + "y";
    bool adjectival =
        lexicon_has(stem, is_adjective) ||
        lexicon_has(w.substr(0, n - 1), is_adjective) ||
        (ends_with(w, "ier") && lexicon_has(y_stem, is_adjective)) ||
        (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
         lexicon_has(stem.substr(0, stem.size() - 1), is_adjective));
    if (adjectival) return PennTag::JJR;
  }
  if (n >= 5 && ends_with(w, "ing")) return PennTag::VBG;
  if (n >= 4 && ends_with(w, "ed"))
    return is_auxiliary(to_lower(previous)) ? PennTag::VBN : PennTag::VBD;
  if (n >= 3 && ends_with(w, "s") && !ends_with(w, "ss") &&
      !ends_with(w, "us") && !ends_with(w, "is") && w.find('-') == w.npos) {
    bool verb = lexicon_has(w.substr(0, n - 1), is_base_verb) ||
                (ends_with(w, "es") && lexicon_has(w.substr(0, n - 2), is_base_verb)) ||
                (ends_with(w, "ies") &&
                 lexicon_has(std::string(w.substr(0, n - 3)) + "y", is_base_verb));
    return verb ? PennTag::VBZ : PennTag::NNS;
  }

  if (auto dash = w.rfind('-'); dash != w.npos && dash + 1 < n) {
    if (lexicon_has(w.substr(dash + 1), is_adjective)) return PennTag::JJ;
  }
  if (position > 0 && is_upper(word.front())) return PennTag::NNP;
  return PennTag::NN;
}

TaggedSentence BaselineTagger::tag_sentence(std::span<const std::string> words,
                                            std::size_t source) const {
  if (words.empty()) throw InvalidArgument("empty sentence");
  TaggedSentence out;
  out.source = source;
  out.tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string_view prev = i > 0 ? std::string_view(words[i - 1]) : "";
    out.tokens.push_back({words[i], tag_word(words[i], i, prev), i});
  }
  return out;
}

TaggedSentence BaselineTagger::tag_text(std::string_view raw_text,
                                        std::size_t source) const {
  auto words = join_hyphen_compounds(raw_text);
  if (words.empty()) return TaggedSentence{{}, source};
  return tag_sentence(words, source);
}

std::vector<std::string> join_hyphen_compounds(std::string_view raw_text) {
  auto spans = tokenize_spans(raw_text);
  auto is_word = [](const TokenSpan& s) {
    auto c = static_cast<unsigned char>(s.text.front());
    return std::isalnum(c) || c >= 0x80 || c == '\'';
  };
  std::vector<std::string> out;
  for (std::size_t i = 0; i < spans.size();) {
    if (!is_word(spans[i])) {
      out.push_back(spans[i].text);
      ++i;
      continue;
    }
    std::string word = spans[i].text;
    std::size_t end = spans[i].offset + spans[i].text.size();
    std::size_t j = i + 1;
    while (j + 1 < spans.size() && spans[j].text == "-" &&
           spans[j].offset == end && is_word(spans[j + 1]) &&
           spans[j + 1].offset == end + 1) {
      word += '-';
      word += spans[j + 1].text;
      end = spans[j + 1].offset + spans[j + 1].text.size();
      j += 2;
    }
    out.push_back(std::move(word));
    i = j;
  }
  return out;
}

}  // namespace aspectminer
