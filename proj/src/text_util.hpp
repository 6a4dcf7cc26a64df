#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace aspectminer::detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view content);

std::vector<std::string_view> split_whitespace(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

// Lowercases and collapses internal whitespace runs to one space.
std::string normalize_term(std::string_view s);

// Replaces tabs and newlines so a value fits in one tab-separated field.
std::string field(std::string_view s);

}  // namespace aspectminer::detail
