#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aspectminer/corpus.hpp"
#include "aspectminer/patterns.hpp"

namespace aspectminer {

struct MatchScores {
  double aspect_p = 0.0;
  double aspect_r = 0.0;
  double opinion_p = 0.0;
  double opinion_r = 0.0;

  bool operator==(const MatchScores&) const = default;
};

struct ExtractionScores {
  MatchScores subset;  // headline: token-subset aspect matching
  MatchScores exact;   // exact surface matching
};

// True when two aspect terms match: equal after lowercasing, or the tokens
// of one are a subset of the tokens of the other.
bool aspect_terms_match(std::string_view predicted, std::string_view gold);

// Scores predicted pairs against the gold annotations of `gold`.
// A prediction matches through either its canonical or its raw text.
ExtractionScores evaluate_extraction(std::span<const AspectOpinionPair> predicted,
                                     const Corpus& gold);

// Harmonic mean; 0 when p + r = 0. Throws InvalidArgument outside [0,1].
double f_measure(double p, double r);

// Whether a published f value can come from published p and r, given that
// all three were rounded to `decimals` places.
bool f_consistent_with_rounding(double p, double r, double supplied_f,
                                int decimals = 2);

struct ProductScores {
  std::string product;
  double aspect_p = 0, aspect_r = 0, aspect_f = 0;
  double opinion_p = 0, opinion_r = 0, opinion_f = 0;
};

ProductScores make_product_scores(std::string product, const MatchScores& s);

struct EvalReport {
  std::vector<ProductScores> per_product;
  ProductScores averages;
};

// Averages are the per-product means; f is recomputed from averaged p, r.
EvalReport build_report(std::vector<ProductScores> per_product);

struct TTestResult {
  double t_statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1.0;
  bool two_tailed = true;
  bool degenerate = false;
};

// Paired t-test over a - b. Throws InvalidArgument for unequal lengths or
// n < 2.
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b,
                          bool two_tailed = true);

struct BaselineComparison {
  std::string table;  // three blocks: precision, recall, f-measure
  TTestResult aspect_precision;
  TTestResult aspect_recall;
  TTestResult opinion_precision;
  TTestResult opinion_recall;
};

// Throws InvalidArgument when the two reports cover different products.
BaselineComparison compare_to_baseline(const EvalReport& report,
                                       const EvalReport& baseline,
                                       std::string_view report_name = "Proposed",
                                       std::string_view baseline_name = "Baseline");

// Tab-separated report: one `product` row per product, then `average`.
std::string render_report_machine(const EvalReport& report);
EvalReport parse_report_machine(std::string_view content);

// Human-readable precision/recall/f-measure table.
std::string render_report_table(const EvalReport& report);

}  // namespace aspectminer
