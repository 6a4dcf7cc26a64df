#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aspectminer/corpus.hpp"
#include "aspectminer/grouping.hpp"
#include "aspectminer/lexicons.hpp"
#include "aspectminer/patterns.hpp"
#include "aspectminer/scoring.hpp"
#include "aspectminer/summary.hpp"
#include "aspectminer/tagger.hpp"

namespace aspectminer {

// Directory of bundled resources: $ASPECTMINER_DATA if set, else the
// directory recorded at build time.
std::string default_data_dir();

struct ResourcePaths {
  std::string positive_lexicon;
  std::string negative_lexicon;
  std::string aspects;
  std::string synonyms;
  std::string verbs;
  std::string patterns;
  std::string tag_lexicon;

  static ResourcePaths bundled(const std::string& data_dir);
};

struct Resources {
  OpinionLexicon opinions;
  AspectDictionary aspects;
  VerbCategoryLexicon verbs;
  PatternSet patterns;
  TagWeightTable weights;
  BaselineTagger tagger{TagLexicon{}};

  static Resources load(const ResourcePaths& paths);
};

std::vector<TaggedSentence> tag_corpus(const Corpus& corpus,
                                       const BaselineTagger& tagger);

// One pretagged line per corpus sentence, in order. Throws ParseError when
// the line count differs from the sentence count.
std::vector<TaggedSentence> attach_pretagged(const Corpus& corpus,
                                             std::string_view pretagged);

// Builds a gold-free corpus from a pretagged file, one sentence per line.
Corpus corpus_from_pretagged(std::string_view pretagged,
                             std::string product_name,
                             std::vector<TaggedSentence>* tagged);

std::vector<AspectOpinionPair> extract_corpus(
    std::span<const TaggedSentence> sentences, const Resources& resources,
    const ExtractionOptions& options = {});

struct SummaryRun {
  std::vector<AspectOpinionPair> pairs;
  std::vector<AspectGroup> groups;
  std::vector<SentenceScore> scores;
  Summary summary;
};

SummaryRun summarize_corpus(const Corpus& corpus,
                            std::span<const TaggedSentence> sentences,
                            const Resources& resources, std::size_t top_k,
                            const ExtractionOptions& options = {});

// `sentence<TAB>aspect<TAB>opinion<TAB>polarity<TAB>pattern` per pair.
std::string render_pairs_machine(std::span<const AspectOpinionPair> pairs);

// `tags<TAB>support<TAB>ratio` per mined pattern.
std::string render_mined_machine(std::span<const MinedPattern> mined);

}  // namespace aspectminer
