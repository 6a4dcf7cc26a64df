// Independent reference implementations and property checks shared by the
// unit tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aspectminer/eval.hpp"
#include "aspectminer/grouping.hpp"
#include "aspectminer/patterns.hpp"
#include "aspectminer/pipeline.hpp"
#include "aspectminer/scoring.hpp"

namespace aspectminer::oracle {

struct PropertyTally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  void merge(const PropertyTally& o) {
    if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
    cases += o.cases;
    failures += o.failures;
  }
};

// --- mining -----------------------------------------------------------------

using TagSeq = std::vector<PennTag>;

// Every window of every sentence, counted once per sentence.
inline std::map<TagSeq, std::size_t> brute_force_windows(
    const std::vector<TaggedSentence>& sentences, std::size_t max_len) {
  std::map<TagSeq, std::size_t> support;
  for (const auto& s : sentences) {
    std::set<TagSeq> seen;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t n = 2; n <= max_len && i + n <= s.size(); ++n) {
        TagSeq w;
        for (std::size_t k = i; k < i + n; ++k) w.push_back(s.tokens[k].tag);
        seen.insert(w);
      }
    for (const auto& w : seen) ++support[w];
  }
  return support;
}

inline std::set<std::pair<TagSeq, std::size_t>> brute_force_mine(
    const std::vector<TaggedSentence>& sentences, std::size_t min_support,
    std::size_t max_len) {
  std::set<std::pair<TagSeq, std::size_t>> out;
  for (const auto& [w, n] : brute_force_windows(sentences, max_len))
    if (n >= min_support) out.emplace(w, n);
  return out;
}

inline std::vector<TaggedSentence> random_tag_corpus(std::mt19937& rng,
                                                     std::size_t max_sentences,
                                                     std::size_t max_tags) {
  static const PennTag alphabet[] = {PennTag::NN, PennTag::VBZ, PennTag::JJ,
                                     PennTag::RB, PennTag::DT};
  std::uniform_int_distribution<std::size_t> n_sent(1, max_sentences);
  std::uniform_int_distribution<std::size_t> n_tag(1, max_tags);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(alphabet) - 1);
  std::vector<TaggedSentence> out(n_sent(rng));
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s].source = s;
    const auto len = n_tag(rng);
    for (std::size_t i = 0; i < len; ++i)
      out[s].tokens.push_back({"w" + std::to_string(i), alphabet[pick(rng)], i});
  }
  return out;
}

// --- evaluation ---------------------------------------------------------------

inline std::vector<std::string> words_of(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string joined(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& x : w) out += (out.empty() ? "" : " ") + x;
  return out;
}

// All words of `small` occur in `big`.
inline bool contains_all(const std::vector<std::string>& big,
                         const std::vector<std::string>& small) {
  for (const auto& w : small)
    if (std::find(big.begin(), big.end(), w) == big.end()) return false;
  return true;
}

inline bool subset_either_way(const std::string& a, const std::string& b) {
  auto x = words_of(a), y = words_of(b);
  if (x.empty() || y.empty()) return false;
  return contains_all(x, y) || contains_all(y, x);
}

// Pair-by-pair matcher over the gold corpus, token-subset aspect rule.
inline MatchScores brute_force_evaluate(const std::vector<AspectOpinionPair>& predicted,
                                        const Corpus& gold) {
  struct Pred {
    std::string canonical, raw;
    int sign;
  };
  double ap_num = 0, ap_den = 0, ar_num = 0, ar_den = 0;
  double op_num = 0, op_den = 0, or_num = 0, or_den = 0;
  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    std::vector<Pred> preds;
    for (const auto& p : predicted) {
      if (p.sentence != s) continue;
      Pred q{joined(words_of(p.aspect_surface)), joined(words_of(p.aspect_text)),
             p.orientation == Polarity::Positive ? 1 : -1};
      bool dup = false;
      for (const auto& e : preds)
        dup = dup || (e.canonical == q.canonical && e.raw == q.raw && e.sign == q.sign);
      if (!dup) preds.push_back(q);
    }
    std::vector<std::pair<std::string, int>> golds;
    for (const auto& g : gold.sentences[s].gold) {
      std::pair<std::string, int> q{joined(words_of(g.aspect_term)), g.strength > 0 ? 1 : -1};
      if (std::find(golds.begin(), golds.end(), q) == golds.end()) golds.push_back(q);
    }
    auto hit = [](const Pred& p, const std::string& g) {
      return subset_either_way(p.canonical, g) || subset_either_way(p.raw, g);
    };
    // Aspect level: predictions distinct by term pair, gold distinct by term.
    std::vector<Pred> apreds;
    for (const auto& p : preds) {
      bool dup = false;
      for (const auto& e : apreds) dup = dup || (e.canonical == p.canonical && e.raw == p.raw);
      if (!dup) apreds.push_back(p);
    }
    std::vector<std::string> agolds;
    for (const auto& g : golds)
      if (std::find(agolds.begin(), agolds.end(), g.first) == agolds.end())
        agolds.push_back(g.first);

    for (const auto& p : apreds) {
      ap_den += 1;
      for (const auto& g : agolds)
        if (hit(p, g)) { ap_num += 1; break; }
    }
    for (const auto& g : agolds) {
      ar_den += 1;
      for (const auto& p : apreds)
        if (hit(p, g)) { ar_num += 1; break; }
    }
    for (const auto& p : preds) {
      op_den += 1;
      for (const auto& g : golds)
        if (p.sign == g.second && hit(p, g.first)) { op_num += 1; break; }
    }
    for (const auto& g : golds) {
      or_den += 1;
      for (const auto& p : preds)
        if (p.sign == g.second && hit(p, g.first)) { or_num += 1; break; }
    }
  }
  auto frac = [](double n, double d) { return d == 0 ? 0.0 : n / d; };
  return {frac(ap_num, ap_den), frac(ar_num, ar_den), frac(op_num, op_den),
          frac(or_num, or_den)};
}

// --- property suites --------------------------------------------------------

// Every extracted pair has a polar opinion word whose polarity is the pair's
// orientation, and the aspect token is a noun or dictionary term.
inline PropertyTally polarity_gate_property(const Resources& r, std::mt19937& rng,
                                            std::size_t cases) {
  static const std::vector<std::pair<std::string, PennTag>> vocab = {
      {"the", PennTag::DT},      {"camera", PennTag::NN},  {"zoom", PennTag::NN},
      {"battery", PennTag::NN},  {"life", PennTag::NN},    {"pictures", PennTag::NNS},
      {"is", PennTag::VBZ},      {"are", PennTag::VBP},    {"very", PennTag::RB},
      {"great", PennTag::JJ},    {"terrible", PennTag::JJ}, {"blue", PennTag::JJ},
      {"fast", PennTag::RB},     {"and", PennTag::CC},     {"of", PennTag::IN},
      {"improved", PennTag::VBD}, {"looking", PennTag::VBG}, {"big", PennTag::JJ},
      {"slow", PennTag::JJ},     {"nice", PennTag::JJ},    {"to", PennTag::TO},
      {"use", PennTag::VB},      {"it", PennTag::PRP},     {".", PennTag::Period}};
  PropertyTally t;
  std::uniform_int_distribution<std::size_t> len(1, 12), pick(0, vocab.size() - 1);
  for (std::size_t c = 0; c < cases; ++c) {
    TaggedSentence s;
    const auto n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [w, tag] = vocab[pick(rng)];
      s.tokens.push_back({w, tag, i});
    }
    bool ok = true;
    for (const auto& p : extract_pairs(s, r.aspects, r.opinions, r.patterns)) {
      const auto pol = r.opinions.polarity(s.tokens[p.opinion_index].surface);
      ok = ok && pol != Polarity::None && pol == p.orientation &&
           p.opinion_surface == s.tokens[p.opinion_index].surface;
      const auto& a = s.tokens[p.aspect_index];
      ok = ok && (is_noun(a.tag) || r.aspects.covering_term(s, p.aspect_index));
      ok = ok && p.aspect_span.begin <= p.aspect_index && p.aspect_index < p.aspect_span.end;
    }
    t.check(ok, "polarity gate: " + render_pretagged(s));
  }
  return t;
}

inline std::vector<AspectOpinionPair> random_aspect_pairs(std::mt19937& rng) {
  static const std::vector<std::string> surfaces = {
      "battery",    "battery life", "battery power", "life",   "photo",
      "photos",     "picture",      "pictures",      "zoom",   "zoom lens",
      "lens",       "memory",       "capacity",      "screen", "lcd screen",
      "lcd",        "menu",         "menus",         "size",   "weight"};
  std::uniform_int_distribution<std::size_t> n(0, 12), pick(0, surfaces.size() - 1);
  std::vector<AspectOpinionPair> out;
  const auto count = n(rng);
  for (std::size_t i = 0; i < count; ++i) {
    AspectOpinionPair p;
    p.aspect_surface = surfaces[pick(rng)];
    p.aspect_text = p.aspect_surface;
    p.sentence = i;
    p.orientation = (rng() & 1) ? Polarity::Positive : Polarity::Negative;
    out.push_back(p);
  }
  return out;
}

inline std::vector<std::pair<std::string, std::set<std::string>>> partition_of(
    const std::vector<AspectGroup>& groups) {
  std::vector<std::pair<std::string, std::set<std::string>>> out;
  for (const auto& g : groups) out.emplace_back(g.canonical_label, g.members);
  return out;
}

// Groups partition the input, ignore input order, and regrouping the
// labelled output changes nothing.
inline PropertyTally grouping_property(const AspectDictionary& dict, std::mt19937& rng,
                                       std::size_t cases) {
  PropertyTally t;
  for (std::size_t c = 0; c < cases; ++c) {
    auto pairs = random_aspect_pairs(rng);
    auto groups = group_aspects(pairs, dict);

    std::size_t total = 0;
    std::map<std::string, int> seen;
    for (const auto& g : groups) {
      total += g.pairs.size();
      for (const auto& m : g.members) ++seen[m];
      for (const auto& p : g.pairs)
        if (!g.members.count(p.aspect_surface)) total = SIZE_MAX / 2;
    }
    bool partition = total == pairs.size();
    for (const auto& p : pairs) partition = partition && seen[p.aspect_surface] == 1;
    t.check(partition, "grouping partition");

    auto shuffled = pairs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    t.check(partition_of(group_aspects(shuffled, dict)) == partition_of(groups),
            "grouping order independence");

    std::vector<AspectOpinionPair> relabelled;
    for (const auto& g : groups)
      for (auto p : g.pairs) {
        p.aspect_surface = g.canonical_label;
        relabelled.push_back(p);
      }
    auto again = group_aspects(relabelled, dict);
    std::vector<std::string> a, b;
    for (const auto& g : groups) a.push_back(g.canonical_label);
    for (const auto& g : again) b.push_back(g.canonical_label);
    t.check(a == b, "grouping idempotence");
  }
  return t;
}

// Adding an adjective or adverb never lowers a sentence's weight; adding a
// positive verb never lowers it and a negative verb never raises it.
inline PropertyTally scoring_property(std::mt19937& rng, std::size_t cases) {
  static const std::vector<std::pair<std::string, PennTag>> base = {
      {"the", PennTag::DT},   {"camera", PennTag::NN}, {"is", PennTag::VBZ},
      {"good", PennTag::JJ},  {"very", PennTag::RB},   {"warn", PennTag::VBP},
      {"tell", PennTag::VBP}, {"best", PennTag::JJS},  {"more", PennTag::RBR}};
  static const std::vector<std::pair<std::string, PennTag>> graded = {
      {"nice", PennTag::JJ},   {"nicer", PennTag::JJR}, {"nicest", PennTag::JJS},
      {"well", PennTag::RB},   {"better", PennTag::RBR}, {"best", PennTag::RBS}};
  const auto verbs = VerbCategoryLexicon::defaults();
  const TagWeightTable weights;
  PropertyTally t;
  std::uniform_int_distribution<std::size_t> len(0, 10), pick(0, base.size() - 1),
      g(0, graded.size() - 1);
  for (std::size_t c = 0; c < cases; ++c) {
    TaggedSentence s;
    const auto n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [w, tag] = base[pick(rng)];
      s.tokens.push_back({w, tag, i});
    }
    const int before = weight_sentence(s, weights, verbs).total;
    auto with = [&](std::string w, PennTag tag) {
      auto copy = s;
      std::uniform_int_distribution<std::size_t> at(0, copy.size());
      copy.tokens.insert(copy.tokens.begin() + static_cast<std::ptrdiff_t>(at(rng)),
                         Token{std::move(w), tag, 0});
      for (std::size_t i = 0; i < copy.size(); ++i) copy.tokens[i].index = i;
      return weight_sentence(copy, weights, verbs).total;
    };
    const auto& [gw, gt] = graded[g(rng)];
    t.check(with(gw, gt) >= before, "scoring: modifier lowered weight");
    t.check(with("tell", PennTag::VB) >= before, "scoring: positive verb lowered weight");
    t.check(with("warn", PennTag::VB) <= before, "scoring: negative verb raised weight");
  }
  return t;
}

// A mined sequence's support never exceeds that of its prefix or suffix.
inline PropertyTally mining_antimonotone_property(std::mt19937& rng, std::size_t cases) {
  PropertyTally t;
  std::uniform_int_distribution<std::size_t> ms(1, 3);
  for (std::size_t c = 0; c < cases; ++c) {
    auto corpus = random_tag_corpus(rng, 10, 8);
    auto mined = mine_frequent_tag_sets(corpus, ms(rng), 6);
    std::map<TagSeq, std::size_t> support;
    for (const auto& m : mined) support[m.tags] = m.support;
    bool ok = true;
    for (const auto& m : mined) {
      if (m.tags.size() <= 2) continue;
      TagSeq prefix(m.tags.begin(), m.tags.end() - 1), suffix(m.tags.begin() + 1, m.tags.end());
      ok = ok && support.count(prefix) && support.count(suffix) &&
           support[prefix] >= m.support && support[suffix] >= m.support;
    }
    t.check(ok, "mining anti-monotonicity");
  }
  return t;
}

inline PropertyTally f_measure_property(std::mt19937& rng, std::size_t cases) {
  PropertyTally t;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t c = 0; c < cases; ++c) {
    const double p = (c % 10 == 0) ? 0.0 : u(rng), r = u(rng);
    const double f = f_measure(p, r);
    t.check(f == f_measure(r, p) && f >= 0.0 && f <= std::max(p, r) + 1e-15 &&
                f >= std::min(p, r) - 1e-15,
            "f-measure symmetry/bounds");
  }
  return t;
}

}  // namespace aspectminer::oracle
