#include "aspectminer/grouping.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "text_util.hpp"

namespace aspectminer {
namespace {

class DisjointSets {
 public:
  std::size_t make() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string head_of(std::string_view term, HeadWord head) {
  auto words = detail::split_whitespace(term);
  if (words.empty()) return {};
  return std::string(head == HeadWord::First ? words.front() : words.back());
}

bool shorter(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

std::vector<AspectGroup> group_aspects(std::span<const AspectOpinionPair> pairs,
                                       const AspectDictionary& dict,
                                       const GroupingOptions& options) {
  // Nodes: surfaces ("s:"), dictionary canonicals ("c:") and heads ("h:").
  DisjointSets sets;
  std::map<std::string, std::size_t> nodes;
  auto node = [&](std::string key) {
    auto [it, inserted] = nodes.try_emplace(std::move(key), 0);
    if (inserted) it->second = sets.make();
    return it->second;
  };

  std::map<std::string, std::optional<std::string>> surfaces;
  for (const auto& p : pairs)
    if (!surfaces.count(p.aspect_surface))
      surfaces.emplace(p.aspect_surface, dict.lookup(p.aspect_surface));

  std::map<std::string, bool> heads;
  for (const auto& [surface, canonical] : surfaces) {
    auto s = node("s:" + surface);
    auto h = head_of(surface, options.head);
    sets.unite(s, node("h:" + h));
    heads[h] = true;
    if (canonical) {
      sets.unite(s, node("c:" + *canonical));
      auto ch = head_of(*canonical, options.head);
      sets.unite(s, node("h:" + ch));
      heads[ch] = true;
    }
  }
  if (options.merge_plurals) {
    for (const auto& [h, _] : heads) {
      if (h.size() > 1 && h.back() == 's') {
        auto singular = h.substr(0, h.size() - 1);
        if (heads.count(singular)) sets.unite(node("h:" + h), node("h:" + singular));
      }
    }
  }

  std::map<std::size_t, AspectGroup> by_root;
  std::map<std::size_t, std::vector<std::string>> canonicals;
  for (const auto& [surface, canonical] : surfaces) {
    auto root = sets.find(nodes.at("s:" + surface));
    by_root[root].members.insert(surface);
    if (canonical) canonicals[root].push_back(*canonical);
  }
  for (const auto& p : pairs)
    by_root[sets.find(nodes.at("s:" + p.aspect_surface))].pairs.push_back(p);

  std::vector<AspectGroup> groups;
  for (auto& [root, group] : by_root) {
    auto it = canonicals.find(root);
    if (it != canonicals.end()) {
      group.canonical_label = *std::min_element(it->second.begin(),
                                                it->second.end(), shorter);
    } else {
      group.canonical_label = *std::min_element(group.members.begin(),
                                                group.members.end(), shorter);
    }
    groups.push_back(std::move(group));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return a.canonical_label != b.canonical_label
               ? a.canonical_label < b.canonical_label
               : *a.members.begin() < *b.members.begin();
  });
  return groups;
}

}  // namespace aspectminer
