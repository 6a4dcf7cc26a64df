// aspectminer: extract, group, score and summarize aspect opinions from
// review corpora.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aspectminer/corpus.hpp"
#include "aspectminer/error.hpp"
#include "aspectminer/eval.hpp"
#include "aspectminer/patterns.hpp"
#include "aspectminer/pipeline.hpp"
#include "aspectminer/summary.hpp"

namespace fs = std::filesystem;
using namespace aspectminer;

namespace {

constexpr int kExitError = 1;
constexpr int kExitMissingResource = 2;
constexpr int kExitParse = 3;

struct RunConfig {
  std::vector<std::string> corpora;
  std::vector<std::string> pretagged;
  std::vector<std::string> products;
  ResourcePaths resources;
  std::string baseline;
  std::size_t top_k = 5;
  std::size_t min_support = 3;
  std::size_t max_len = 6;
  std::string format = "text";
  std::string out = "stdout";
  bool no_fallback = false;
  bool no_conjunction = false;
};

// A corpus with its tagged sentences.
struct Loaded {
  Corpus corpus;
  std::vector<TaggedSentence> tagged;
};

std::string product_for(const RunConfig& cfg, std::size_t i, const std::string& path) {
  if (i < cfg.products.size()) return cfg.products[i];
  return fs::path(path).stem().string();
}

void require_file(const std::string& path) {
  if (path.empty() || !fs::is_regular_file(path))
    throw ResourceError(path, "missing resource file");
}

void validate(const RunConfig& cfg, bool needs_resources) {
  if (cfg.top_k < 1) throw InvalidArgument("--top-k must be at least 1");
  if (cfg.min_support < 1) throw InvalidArgument("--min-support must be at least 1");
  for (const auto& p : cfg.corpora) require_file(p);
  for (const auto& p : cfg.pretagged) require_file(p);
  if (!cfg.baseline.empty()) require_file(cfg.baseline);
  if (!needs_resources) return;
  const auto& r = cfg.resources;
  for (const auto* p : {&r.positive_lexicon, &r.negative_lexicon, &r.aspects,
                        &r.synonyms, &r.verbs, &r.patterns, &r.tag_lexicon})
    require_file(*p);
}

Loaded load_one(const RunConfig& cfg, std::size_t i, const BaselineTagger* tagger) {
  Loaded out;
  const bool has_corpus = i < cfg.corpora.size();
  const bool has_pretagged = i < cfg.pretagged.size();
  if (has_corpus) {
    std::vector<ParseWarning> warnings;
    out.corpus = parse_corpus_file(read_file(cfg.corpora[i]),
                                   product_for(cfg, i, cfg.corpora[i]), &warnings);
    for (const auto& w : warnings)
      std::cerr << "warning: " << cfg.corpora[i] << ":" << w.line << ": " << w.message
                << "\n";
    if (has_pretagged) {
      out.tagged = attach_pretagged(out.corpus, read_file(cfg.pretagged[i]));
    } else {
      if (!tagger) throw InvalidArgument("a tagger is required to tag raw text");
      out.tagged = tag_corpus(out.corpus, *tagger);
    }
  } else if (has_pretagged) {
    out.corpus = corpus_from_pretagged(read_file(cfg.pretagged[i]),
                                       product_for(cfg, i, cfg.pretagged[i]),
                                       &out.tagged);
  } else {
    throw InvalidArgument("--corpus or --pretagged is required");
  }
  return out;
}

std::size_t input_count(const RunConfig& cfg) {
  return std::max(cfg.corpora.size(), cfg.pretagged.size());
}

void require_single_input(const RunConfig& cfg) {
  if (input_count(cfg) != 1)
    throw InvalidArgument("exactly one --corpus or --pretagged input is expected");
  if (!cfg.corpora.empty() && cfg.pretagged.size() > 1)
    throw InvalidArgument("one --pretagged file per --corpus");
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "stdout" || cfg.out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ResourceError(cfg.out, "cannot write output");
  f << text;
}

ExtractionOptions extraction_options(const RunConfig& cfg) {
  return {!cfg.no_fallback, !cfg.no_conjunction};
}

// --- subcommands ------------------------------------------------------------

void run_tag(const RunConfig& cfg) {
  if (cfg.corpora.size() != 1) throw InvalidArgument("tag expects one --corpus");
  require_file(cfg.resources.tag_lexicon);
  BaselineTagger tagger(TagLexicon::load(cfg.resources.tag_lexicon));
  auto loaded = load_one(RunConfig{cfg.corpora, {}, cfg.products, cfg.resources},
                         0, &tagger);
  std::string out;
  for (const auto& s : loaded.tagged) out += render_pretagged(s) + "\n";
  write_output(cfg, out);
}

void run_mine(const RunConfig& cfg) {
  require_single_input(cfg);
  std::optional<BaselineTagger> tagger;
  if (cfg.pretagged.empty()) {
    require_file(cfg.resources.tag_lexicon);
    tagger.emplace(TagLexicon::load(cfg.resources.tag_lexicon));
  }
  auto loaded = load_one(cfg, 0, tagger ? &*tagger : nullptr);
  auto mined = mine_frequent_tag_sets(loaded.tagged, cfg.min_support, cfg.max_len);
  write_output(cfg, render_mined_machine(mined));
}

void run_extract(const RunConfig& cfg) {
  require_single_input(cfg);
  validate(cfg, true);
  auto resources = Resources::load(cfg.resources);
  auto loaded = load_one(cfg, 0, &resources.tagger);
  auto pairs = extract_corpus(loaded.tagged, resources, extraction_options(cfg));
  write_output(cfg, render_pairs_machine(pairs));
}

void run_summarize(const RunConfig& cfg) {
  require_single_input(cfg);
  validate(cfg, true);
  const auto format = parse_summary_format(cfg.format);
  auto resources = Resources::load(cfg.resources);
  auto loaded = load_one(cfg, 0, &resources.tagger);
  auto run = summarize_corpus(loaded.corpus, loaded.tagged, resources, cfg.top_k,
                              extraction_options(cfg));
  write_output(cfg, render(run.summary, format));
}

void run_evaluate(const RunConfig& cfg) {
  if (cfg.corpora.empty()) throw InvalidArgument("evaluate needs a gold --corpus");
  if (!cfg.pretagged.empty() && cfg.pretagged.size() != cfg.corpora.size())
    throw ParseError("evaluate: " + std::to_string(cfg.pretagged.size()) +
                     " --pretagged files for " + std::to_string(cfg.corpora.size()) +
                     " --corpus files");
  if (cfg.format != "text" && cfg.format != "machine")
    throw InvalidArgument("evaluate supports --format text or machine");
  validate(cfg, true);
  auto resources = Resources::load(cfg.resources);

  std::vector<ProductScores> subset, exact;
  for (std::size_t i = 0; i < cfg.corpora.size(); ++i) {
    auto loaded = load_one(cfg, i, &resources.tagger);
    auto pairs = extract_corpus(loaded.tagged, resources, extraction_options(cfg));
    auto scores = evaluate_extraction(pairs, loaded.corpus);
    subset.push_back(make_product_scores(loaded.corpus.product_name, scores.subset));
    exact.push_back(make_product_scores(loaded.corpus.product_name, scores.exact));
  }
  auto report = build_report(std::move(subset));
  auto exact_report = build_report(std::move(exact));

  std::string out;
  if (cfg.format == "machine") {
    out = render_report_machine(report);
  } else {
    out = "Token-subset aspect matching\n" + render_report_table(report) +
          "\nExact aspect matching\n" + render_report_table(exact_report);
  }
  if (!cfg.baseline.empty()) {
    auto baseline = parse_report_machine(read_file(cfg.baseline));
    auto cmp = compare_to_baseline(report, baseline);
    out += (cfg.format == "machine" ? "# " : "\n") + std::string("Comparison\n");
    if (cfg.format == "machine") {
      auto t = [](const char* name, const TTestResult& r) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "ttest\t%s\t%.6f\t%zu\t%.6f\n", name,
                      r.t_statistic, r.degrees_of_freedom, r.p_value);
        return std::string(buf);
      };
      out += t("aspect_precision", cmp.aspect_precision) +
             t("aspect_recall", cmp.aspect_recall) +
             t("opinion_precision", cmp.opinion_precision) +
             t("opinion_recall", cmp.opinion_recall);
    } else {
      out += cmp.table;
    }
  }
  write_output(cfg, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aspect-based opinion mining for customer reviews"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a TOML/INI config file");

  RunConfig cfg;
  cfg.resources = ResourcePaths::bundled(default_data_dir());

  app.add_option("--corpus", cfg.corpora, "Review file(s) in the annotated line format");
  app.add_option("--pretagged", cfg.pretagged,
                 "Pretagged word/TAG file(s), one line per corpus sentence");
  app.add_option("--product", cfg.products, "Product name(s), default: file stem");
  app.add_option("--patterns", cfg.resources.patterns, "Tag pattern file");
  app.add_option("--pos-lex", cfg.resources.positive_lexicon, "Positive word list");
  app.add_option("--neg-lex", cfg.resources.negative_lexicon, "Negative word list");
  app.add_option("--aspects", cfg.resources.aspects, "Aspect term list");
  app.add_option("--synonyms", cfg.resources.synonyms, "Aspect synonym file");
  app.add_option("--verbs", cfg.resources.verbs, "Verb category file");
  app.add_option("--tag-lexicon", cfg.resources.tag_lexicon, "Tagger lexicon");
  app.add_option("--top-k", cfg.top_k, "Sentences per pros/cons list")->capture_default_str();
  app.add_option("--min-support", cfg.min_support, "Minimum sentence support for mining")
      ->capture_default_str();
  app.add_option("--max-len", cfg.max_len, "Longest mined tag sequence (2..6)")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: text, machine or histogram")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Output path or 'stdout'")->capture_default_str();
  app.add_option("--baseline", cfg.baseline, "Baseline report (machine format) for evaluate");
  app.add_flag("--no-fallback", cfg.no_fallback, "Disable nearest-aspect fallback search");
  app.add_flag("--no-conjunction", cfg.no_conjunction, "Disable 'X and Y' aspect expansion");

  auto* tag = app.add_subcommand("tag", "Tag a corpus with the baseline tagger");
  auto* mine = app.add_subcommand("mine", "Mine frequent tag sequences");
  auto* extract = app.add_subcommand("extract", "Extract aspect/opinion pairs");
  auto* summarize = app.add_subcommand("summarize", "Produce the pros/cons summary");
  auto* evaluate = app.add_subcommand("evaluate", "Score extraction against gold labels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tag) run_tag(cfg);
    else if (*mine) run_mine(cfg);
    else if (*extract) run_extract(cfg);
    else if (*summarize) run_summarize(cfg);
    else if (*evaluate) run_evaluate(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "aspectminer: " << e.what() << "\n";
    return kExitMissingResource;
  } catch (const ParseError& e) {
    std::cerr << "aspectminer: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "aspectminer: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
