#include "aspectminer/pipeline.hpp"

#include <cstdio>
#include <cstdlib>

#include "aspectminer/error.hpp"
#include "text_util.hpp"

#ifndef ASPECTMINER_DATA_DIR
#define ASPECTMINER_DATA_DIR "data"
#endif

namespace aspectminer {

std::string default_data_dir() {
  if (const char* env = std::getenv("ASPECTMINER_DATA"); env && *env) return env;
  return ASPECTMINER_DATA_DIR;
}

ResourcePaths ResourcePaths::bundled(const std::string& data_dir) {
  const std::string d = data_dir.empty() || data_dir.back() == '/'
                            ? data_dir
                            : data_dir + "/";
  return {d + "opinion/positive-words.txt",
          d + "opinion/negative-words.txt",
          d + "aspects/camera-spec.txt",
          d + "aspects/camera-synonyms.txt",
          d + "verb-categories.tsv",
          d + "patterns.txt",
          d + "tag-lexicon.tsv"};
}

Resources Resources::load(const ResourcePaths& paths) {
  Resources r;
  r.opinions = OpinionLexicon::load(paths.positive_lexicon, paths.negative_lexicon);
  r.aspects = AspectDictionary::load(paths.aspects, paths.synonyms);
  r.verbs = VerbCategoryLexicon::load(paths.verbs);
  r.patterns = PatternSet::load(paths.patterns);
  r.tagger = BaselineTagger(TagLexicon::load(paths.tag_lexicon));
  return r;
}

std::vector<TaggedSentence> tag_corpus(const Corpus& corpus,
                                       const BaselineTagger& tagger) {
  std::vector<TaggedSentence> out;
  out.reserve(corpus.sentences.size());
  for (std::size_t i = 0; i < corpus.sentences.size(); ++i)
    out.push_back(tagger.tag_text(corpus.sentences[i].raw_text, i));
  return out;
}

namespace {

// "a\nb\n" is two lines, "\n" is one empty line, "" is none.
std::vector<std::string_view> pretagged_lines(std::string_view content) {
  return detail::split_lines(content);
}

}  // namespace

std::vector<TaggedSentence> attach_pretagged(const Corpus& corpus,
                                             std::string_view pretagged) {
  auto lines = pretagged_lines(pretagged);
  if (lines.size() != corpus.sentences.size())
    throw ParseError("pretagged file has " + std::to_string(lines.size()) +
                     " lines but the corpus has " +
                     std::to_string(corpus.sentences.size()) + " sentences");
  std::vector<TaggedSentence> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(parse_pretagged(lines[i], i));
    } catch (const ParseError& e) {
      throw ParseError("pretagged line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

Corpus corpus_from_pretagged(std::string_view pretagged, std::string product_name,
                             std::vector<TaggedSentence>* tagged) {
  Corpus corpus;
  corpus.product_name = std::move(product_name);
  auto lines = pretagged_lines(pretagged);
  std::vector<TaggedSentence> sentences;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    TaggedSentence ts;
    try {
      ts = parse_pretagged(lines[i], i);
    } catch (const ParseError& e) {
      throw ParseError("pretagged line " + std::to_string(i + 1) + ": " + e.what());
    }
    ReviewSentence rs;
    rs.sentence_index = i;
    for (const auto& t : ts.tokens) {
      if (!rs.raw_text.empty()) rs.raw_text += ' ';
      rs.raw_text += t.surface;
    }
    corpus.sentences.push_back(std::move(rs));
    sentences.push_back(std::move(ts));
  }
  if (tagged) *tagged = std::move(sentences);
  return corpus;
}

std::vector<AspectOpinionPair> extract_corpus(std::span<const TaggedSentence> sentences,
                                              const Resources& resources,
                                              const ExtractionOptions& options) {
  std::vector<AspectOpinionPair> out;
  for (const auto& s : sentences) {
    auto pairs = extract_pairs(s, resources.aspects, resources.opinions,
                               resources.patterns, options);
    out.insert(out.end(), std::make_move_iterator(pairs.begin()),
               std::make_move_iterator(pairs.end()));
  }
  return out;
}

SummaryRun summarize_corpus(const Corpus& corpus,
                            std::span<const TaggedSentence> sentences,
                            const Resources& resources, std::size_t top_k,
                            const ExtractionOptions& options) {
  if (sentences.size() != corpus.sentences.size())
    throw InvalidArgument("tagged sentences do not match the corpus");
  SummaryRun run;
  run.pairs = extract_corpus(sentences, resources, options);
  run.groups = group_aspects(run.pairs, resources.aspects);
  run.scores.reserve(sentences.size());
  for (const auto& s : sentences)
    run.scores.push_back(weight_sentence(s, resources.weights, resources.verbs));
  std::vector<std::string> texts;
  texts.reserve(corpus.sentences.size());
  for (const auto& s : corpus.sentences) texts.push_back(s.raw_text);
  run.summary = generate_summary(corpus.product_name, run.groups, run.scores, texts,
                                 top_k);
  return run;
}

std::string render_pairs_machine(std::span<const AspectOpinionPair> pairs) {
  std::string out;
  for (const auto& p : pairs) {
    out += std::to_string(p.sentence) + '\t' + detail::field(p.aspect_surface) + '\t' +
           detail::field(p.opinion_surface) + '\t' +
           std::string(to_string(p.orientation)) + '\t' + p.pattern_name + '\n';
  }
  return out;
}

std::string render_mined_machine(std::span<const MinedPattern> mined) {
  std::string out;
  char ratio[32];
  for (const auto& m : mined) {
    std::string tags;
    for (auto t : m.tags) {
      if (!tags.empty()) tags += ' ';
      tags += to_string(t);
    }
    std::snprintf(ratio, sizeof ratio, "%.6f", m.support_ratio);
    out += tags + '\t' + std::to_string(m.support) + '\t' + ratio + '\n';
  }
  return out;
}

}  // namespace aspectminer
