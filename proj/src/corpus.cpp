#include "aspectminer/corpus.hpp"

#include <charconv>
#include <optional>

#include "text_util.hpp"

namespace aspectminer {
namespace {

using detail::trim;

std::optional<std::uint8_t> parse_flag(std::string_view f) {
  if (f == "u") return static_cast<std::uint8_t>(AnnotationFlag::Unlisted);
  if (f == "p") return static_cast<std::uint8_t>(AnnotationFlag::Pronoun);
  if (f == "s") return static_cast<std::uint8_t>(AnnotationFlag::Suggestion);
  if (f == "cc") return static_cast<std::uint8_t>(AnnotationFlag::Comparative);
  if (f == "cs")
    return static_cast<std::uint8_t>(AnnotationFlag::ComparativeSame);
  return std::nullopt;
}

// `term[+2][u]`; returns an error message on failure.
std::optional<std::string> parse_annotation(std::string_view text,
                                            GoldAnnotation& out) {
  auto open = text.find('[');
  if (open == std::string_view::npos) return "missing strength bracket";
  out.aspect_term = std::string(trim(text.substr(0, open)));
  if (out.aspect_term.empty()) return "empty aspect term";

  auto rest = text.substr(open);
  bool first = true;
  while (!rest.empty()) {
    if (rest.front() != '[') return "unexpected text after bracket";
    auto close = rest.find(']');
    if (close == std::string_view::npos) return "unterminated bracket";
    auto inner = trim(rest.substr(1, close - 1));
    if (first) {
      if (inner.size() != 2 || (inner[0] != '+' && inner[0] != '-'))
        return "strength must be a sign and one digit";
      int digit = 0;
      auto res = std::from_chars(inner.data() + 1, inner.data() + 2, digit);
      if (res.ec != std::errc{} || digit < 1 || digit > 3)
        return "strength must be in 1..3";
      out.strength = inner[0] == '-' ? -digit : digit;
      first = false;
    } else if (auto flag = parse_flag(inner)) {
      out.flags |= *flag;
    }
    // Unknown flags are tolerated.
    rest = trim(rest.substr(close + 1));
  }
  return std::nullopt;
}

// Splits the annotation prefix on commas outside brackets.
std::vector<std::string_view> split_annotations(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    else if (s[i] == ']') depth = depth > 0 ? depth - 1 : 0;
    else if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '\'' || c >= 0x80;
}

}  // namespace

Corpus parse_corpus_file(std::string_view content, std::string product_name,
                         std::vector<ParseWarning>* warnings) {
  Corpus corpus;
  corpus.product_name = std::move(product_name);
  auto warn = [&](std::size_t line, std::string msg) {
    if (warnings) warnings->push_back({line, std::move(msg)});
  };

  std::size_t review = 0;
  std::size_t index = 0;
  bool review_open = false;
  auto lines = detail::split_lines(content);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    if (detail::starts_with(line, "[t]")) {
      if (review_open) ++review;
      review_open = true;
      index = 0;
      ReviewSentence s;
      s.review_id = review;
      s.sentence_index = index++;
      s.raw_text = std::string(trim(line.substr(3)));
      s.is_title = true;
      corpus.sentences.push_back(std::move(s));
      continue;
    }
    auto marker = line.find("##");
    if (marker == std::string_view::npos) {
      auto t = trim(line);
      if (!t.empty() && t.front() != '*')
        warn(ln + 1, "line is neither a title nor a sentence; skipped");
      continue;
    }
    review_open = true;
    ReviewSentence s;
    s.review_id = review;
    s.sentence_index = index++;
    s.raw_text = std::string(trim(line.substr(marker + 2)));
    auto annotations = trim(line.substr(0, marker));
    if (!annotations.empty()) {
      for (auto part : split_annotations(annotations)) {
        part = trim(part);
        if (part.empty()) continue;
        GoldAnnotation a;
        if (auto err = parse_annotation(part, a)) {
          warn(ln + 1, "malformed annotation '" + std::string(part) +
                           "': " + *err + "; gold dropped");
          s.gold.clear();
          break;
        }
        s.gold.push_back(std::move(a));
      }
    }
    corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

std::vector<TokenSpan> tokenize_spans(std::string_view text) {
  std::vector<TokenSpan> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (detail::is_space(text[i])) {
      ++i;
    } else if (is_word_byte(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_byte(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({std::string(text.substr(i, j - i)), i});
      i = j;
    } else {
      out.push_back({std::string(1, text[i]), i});
      ++i;
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& span : tokenize_spans(text)) out.push_back(std::move(span.text));
  return out;
}

}  // namespace aspectminer
