#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "aspectminer/error.hpp"
#include "aspectminer/patterns.hpp"

namespace aspectminer {
namespace {

// An n-gram is keyed by its tag codes packed one per byte.
using Key = std::string;

Key window(const TaggedSentence& s, std::size_t start, std::size_t len) {
  Key k(len, '\0');
  for (std::size_t i = 0; i < len; ++i)
    k[i] = static_cast<char>(s.tokens[start + i].tag);
  return k;
}

// Sentence-level support of each candidate of length `len`.
std::unordered_map<Key, std::size_t> count_support(
    std::span<const TaggedSentence> sentences, std::size_t len,
    const std::unordered_set<Key>* candidates) {
  std::unordered_map<Key, std::size_t> support;
  std::unordered_set<Key> in_sentence;
  for (const auto& s : sentences) {
    if (s.size() < len) continue;
    in_sentence.clear();
    for (std::size_t i = 0; i + len <= s.size(); ++i) {
      auto k = window(s, i, len);
      if (candidates && !candidates->count(k)) continue;
      in_sentence.insert(std::move(k));
    }
    for (const auto& k : in_sentence) ++support[k];
  }
  return support;
}

}  // namespace

std::vector<MinedPattern> mine_frequent_tag_sets(
    std::span<const TaggedSentence> sentences, std::size_t min_support,
    std::size_t max_len) {
  if (min_support < 1) throw InvalidArgument("min_support must be at least 1");
  if (max_len < 2 || max_len > 6)
    throw InvalidArgument("max_len must be in 2..6");

  std::vector<std::pair<Key, std::size_t>> frequent;
  auto level = count_support(sentences, 2, nullptr);
  for (std::size_t len = 2;; ++len) {
    std::vector<Key> current;
    for (auto& [k, n] : level) {
      if (n < min_support) continue;
      frequent.emplace_back(k, n);
      current.push_back(k);
    }
    if (len == max_len || current.empty()) break;

    // Join a and b when a without its first tag equals b without its last.
    std::unordered_map<Key, std::vector<const Key*>> by_prefix;
    for (const auto& k : current) by_prefix[k.substr(0, len - 1)].push_back(&k);
    std::unordered_set<Key> candidates;
    for (const auto& a : current) {
      auto it = by_prefix.find(a.substr(1));
      if (it == by_prefix.end()) continue;
      for (const Key* b : it->second) candidates.insert(a + b->back());
    }
    if (candidates.empty()) break;
    level = count_support(sentences, len + 1, &candidates);
  }

  const double total = static_cast<double>(sentences.size());
  std::vector<MinedPattern> out;
  out.reserve(frequent.size());
  for (auto& [k, n] : frequent) {
    MinedPattern m;
    for (char c : k) m.tags.push_back(static_cast<PennTag>(c));
    m.support = n;
    m.support_ratio = static_cast<double>(n) / total;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.support != b.support) return a.support > b.support;
    if (a.tags.size() != b.tags.size()) return a.tags.size() > b.tags.size();
    return std::lexicographical_compare(
        a.tags.begin(), a.tags.end(), b.tags.begin(), b.tags.end(),
        [](PennTag x, PennTag y) { return to_string(x) < to_string(y); });
  });
  return out;
}

}  // namespace aspectminer
