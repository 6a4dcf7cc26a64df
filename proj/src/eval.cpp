#include "aspectminer/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include <boost/math/special_functions/beta.hpp>

#include "aspectminer/error.hpp"
#include "text_util.hpp"

namespace aspectminer {
namespace {

std::set<std::string> word_set(std::string_view term) {
  std::set<std::string> out;
  for (auto w : detail::split_whitespace(term)) out.insert(to_lower(w));
  return out;
}

struct PredictedUnit {
  std::string canonical;
  std::string raw;
  Polarity orientation = Polarity::None;

  auto operator<=>(const PredictedUnit&) const = default;
};

struct GoldUnit {
  std::string term;
  int sign = 0;

  auto operator<=>(const GoldUnit&) const = default;
};

using Matcher = bool (*)(std::string_view, std::string_view);

bool exact_match(std::string_view a, std::string_view b) {
  return detail::normalize_term(a) == detail::normalize_term(b);
}

int sign_of(Polarity p) {
  return p == Polarity::Positive ? 1 : p == Polarity::Negative ? -1 : 0;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

MatchScores score_with(const std::vector<std::set<PredictedUnit>>& predicted,
                       const Corpus& gold, Matcher match) {
  std::size_t a_pred = 0, a_pred_hit = 0, a_gold = 0, a_gold_hit = 0;
  std::size_t o_pred = 0, o_pred_hit = 0, o_gold = 0, o_gold_hit = 0;

  for (std::size_t s = 0; s < gold.sentences.size(); ++s) {
    std::set<std::string> gold_aspects;
    std::set<GoldUnit> gold_opinions;
    for (const auto& g : gold.sentences[s].gold) {
      auto term = detail::normalize_term(g.aspect_term);
      gold_aspects.insert(term);
      gold_opinions.insert({term, g.strength > 0 ? 1 : -1});
    }
    std::set<std::pair<std::string, std::string>> pred_aspects;
    for (const auto& u : predicted[s]) pred_aspects.emplace(u.canonical, u.raw);

    auto aspect_hit = [&](const std::string& c, const std::string& r,
                          const std::string& g) {
      return match(c, g) || match(r, g);
    };

    a_pred += pred_aspects.size();
    a_gold += gold_aspects.size();
    for (const auto& [c, r] : pred_aspects)
      if (std::any_of(gold_aspects.begin(), gold_aspects.end(),
                      [&](const auto& g) { return aspect_hit(c, r, g); }))
        ++a_pred_hit;
    for (const auto& g : gold_aspects)
      if (std::any_of(pred_aspects.begin(), pred_aspects.end(),
                      [&](const auto& p) { return aspect_hit(p.first, p.second, g); }))
        ++a_gold_hit;

    o_pred += predicted[s].size();
    o_gold += gold_opinions.size();
    for (const auto& u : predicted[s])
      if (std::any_of(gold_opinions.begin(), gold_opinions.end(), [&](const auto& g) {
            return sign_of(u.orientation) == g.sign &&
                   aspect_hit(u.canonical, u.raw, g.term);
          }))
        ++o_pred_hit;
    for (const auto& g : gold_opinions)
      if (std::any_of(predicted[s].begin(), predicted[s].end(), [&](const auto& u) {
            return sign_of(u.orientation) == g.sign &&
                   aspect_hit(u.canonical, u.raw, g.term);
          }))
        ++o_gold_hit;
  }
  return {ratio(a_pred_hit, a_pred), ratio(a_gold_hit, a_gold),
          ratio(o_pred_hit, o_pred), ratio(o_gold_hit, o_gold)};
}

}  // namespace

bool aspect_terms_match(std::string_view predicted, std::string_view gold) {
  auto p = word_set(predicted);
  auto g = word_set(gold);
  if (p.empty() || g.empty()) return false;
  return std::includes(g.begin(), g.end(), p.begin(), p.end()) ||
         std::includes(p.begin(), p.end(), g.begin(), g.end());
}

ExtractionScores evaluate_extraction(std::span<const AspectOpinionPair> predicted,
                                     const Corpus& gold) {
  std::vector<std::set<PredictedUnit>> by_sentence(gold.sentences.size());
  for (const auto& p : predicted) {
    if (p.sentence >= gold.sentences.size())
      throw InvalidArgument("prediction references unknown sentence " +
                            std::to_string(p.sentence));
    by_sentence[p.sentence].insert({detail::normalize_term(p.aspect_surface),
                                    detail::normalize_term(p.aspect_text),
                                    p.orientation});
  }
  return {score_with(by_sentence, gold, aspect_terms_match),
          score_with(by_sentence, gold, exact_match)};
}

double f_measure(double p, double r) {
  if (!(p >= 0.0 && p <= 1.0) || !(r >= 0.0 && r <= 1.0))
    throw InvalidArgument("precision and recall must lie in [0, 1]");
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

bool f_consistent_with_rounding(double p, double r, double supplied_f,
                                int decimals) {
  const double half = 0.5 * std::pow(10.0, -decimals);
  const double eps = 1e-12;
  auto clamp01 = [](double x) { return std::clamp(x, 0.0, 1.0); };
  // f increases in both arguments, so the box corners bound it.
  const double lo = f_measure(clamp01(p - half), clamp01(r - half));
  const double hi = f_measure(clamp01(p + half), clamp01(r + half));
  return supplied_f >= lo - half - eps && supplied_f <= hi + half + eps;
}

ProductScores make_product_scores(std::string product, const MatchScores& s) {
  ProductScores out;
  out.product = std::move(product);
  out.aspect_p = s.aspect_p;
  out.aspect_r = s.aspect_r;
  out.aspect_f = f_measure(s.aspect_p, s.aspect_r);
  out.opinion_p = s.opinion_p;
  out.opinion_r = s.opinion_r;
  out.opinion_f = f_measure(s.opinion_p, s.opinion_r);
  return out;
}

EvalReport build_report(std::vector<ProductScores> per_product) {
  EvalReport report;
  report.per_product = std::move(per_product);
  std::sort(report.per_product.begin(), report.per_product.end(),
            [](const auto& a, const auto& b) { return a.product < b.product; });
  MatchScores mean;
  const auto n = report.per_product.size();
  for (const auto& p : report.per_product) {
    mean.aspect_p += p.aspect_p;
    mean.aspect_r += p.aspect_r;
    mean.opinion_p += p.opinion_p;
    mean.opinion_r += p.opinion_r;
  }
  if (n > 0) {
    const double d = static_cast<double>(n);
    mean.aspect_p /= d;
    mean.aspect_r /= d;
    mean.opinion_p /= d;
    mean.opinion_r /= d;
  }
  report.averages = make_product_scores("average", mean);
  return report;
}

TTestResult paired_t_test(std::span<const double> a, std::span<const double> b,
                          bool two_tailed) {
  if (a.size() != b.size())
    throw InvalidArgument("paired samples must have equal length");
  const auto n = a.size();
  if (n < 2) throw InvalidArgument("paired t-test needs at least two pairs");

  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i] - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  TTestResult out;
  out.degrees_of_freedom = n - 1;
  out.two_tailed = two_tailed;
  if (sd <= 1e-12 * std::max(1.0, std::abs(mean))) {
    out.degenerate = true;
    if (std::abs(mean) <= 1e-12) {
      out.t_statistic = 0.0;
      out.p_value = 1.0;
    } else {
      out.t_statistic = std::copysign(std::numeric_limits<double>::infinity(), mean);
      out.p_value = two_tailed || mean > 0 ? 0.0 : 1.0;
    }
    return out;
  }

  const double t = mean / (sd / std::sqrt(static_cast<double>(n)));
  const double df = static_cast<double>(n - 1);
  // P(|T| > |t|) = I_{df/(df+t^2)}(df/2, 1/2)
  const double tail2 = boost::math::ibeta(df / 2.0, 0.5, df / (df + t * t));
  out.t_statistic = t;
  out.p_value = two_tailed ? tail2 : (t > 0 ? tail2 / 2.0 : 1.0 - tail2 / 2.0);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

struct Row {
  std::string name;
  double aspect = 0;
  double opinion = 0;
};

std::string block(const std::string& title, const std::vector<Row>& rows,
                  std::size_t name_width) {
  std::string out = title + "\n";
  out += pad_right("", name_width) + pad_left("Aspect extraction", 20) +
         pad_left("Opinion extraction", 20) + "\n";
  for (const auto& r : rows)
    out += pad_right(r.name, name_width) + pad_left(fixed(r.aspect, 2), 20) +
           pad_left(fixed(r.opinion, 2), 20) + "\n";
  return out;
}

std::string three_blocks(const std::vector<std::pair<std::string, ProductScores>>& rows) {
  std::size_t width = 8;
  for (const auto& [name, _] : rows) width = std::max(width, name.size() + 2);
  std::vector<Row> p, r, f;
  for (const auto& [name, s] : rows) {
    p.push_back({name, s.aspect_p, s.opinion_p});
    r.push_back({name, s.aspect_r, s.opinion_r});
    f.push_back({name, s.aspect_f, s.opinion_f});
  }
  return block("Average Precision", p, width) + block("Average Recall", r, width) +
         block("F-measure", f, width);
}

std::vector<double> column(const EvalReport& r, double ProductScores::*field) {
  std::vector<double> out;
  for (const auto& p : r.per_product) out.push_back(p.*field);
  return out;
}

}  // namespace

BaselineComparison compare_to_baseline(const EvalReport& report,
                                       const EvalReport& baseline,
                                       std::string_view report_name,
                                       std::string_view baseline_name) {
  auto names = [](const EvalReport& r) {
    std::set<std::string> s;
    for (const auto& p : r.per_product) s.insert(p.product);
    return s;
  };
  if (names(report) != names(baseline) ||
      report.per_product.size() != baseline.per_product.size())
    throw InvalidArgument("reports cover different products");

  // Align both reports by product name.
  auto sorted = [](EvalReport r) {
    std::sort(r.per_product.begin(), r.per_product.end(),
              [](const auto& a, const auto& b) { return a.product < b.product; });
    return r;
  };
  const auto ours = sorted(report);
  const auto theirs = sorted(baseline);

  BaselineComparison out;
  out.table = three_blocks({{std::string(baseline_name), theirs.averages},
                            {std::string(report_name), ours.averages}});

  auto test = [&](double ProductScores::*field) {
    auto a = column(ours, field);
    auto b = column(theirs, field);
    if (a.size() < 2) {
      TTestResult degenerate;
      degenerate.degenerate = true;
      degenerate.degrees_of_freedom = 0;
      degenerate.t_statistic = std::numeric_limits<double>::quiet_NaN();
      return degenerate;
    }
    return paired_t_test(a, b, true);
  };
  out.aspect_precision = test(&ProductScores::aspect_p);
  out.aspect_recall = test(&ProductScores::aspect_r);
  out.opinion_precision = test(&ProductScores::opinion_p);
  out.opinion_recall = test(&ProductScores::opinion_r);

  out.table += "Paired t-tests (two-tailed)\n";
  out.table += pad_right("", 20) + pad_left("t", 12) + pad_left("df", 6) +
               pad_left("p", 12) + "\n";
  auto line = [&](const char* name, const TTestResult& t) {
    out.table += pad_right(name, 20) + pad_left(fixed(t.t_statistic, 4), 12) +
                 pad_left(std::to_string(t.degrees_of_freedom), 6) +
                 pad_left(fixed(t.p_value, 4), 12) +
                 (t.degenerate ? "  (degenerate)" : "") + "\n";
  };
  line("Aspect precision", out.aspect_precision);
  line("Aspect recall", out.aspect_recall);
  line("Opinion precision", out.opinion_precision);
  line("Opinion recall", out.opinion_recall);
  return out;
}

std::string render_report_machine(const EvalReport& report) {
  auto row = [](const char* kind, const ProductScores& s) {
    std::string out = kind;
    out += '\t' + detail::field(s.product);
    for (double v : {s.aspect_p, s.aspect_r, s.aspect_f, s.opinion_p, s.opinion_r,
                     s.opinion_f})
      out += '\t' + fixed(v, 6);
    return out + "\n";
  };
  std::string out;
  for (const auto& p : report.per_product) out += row("product", p);
  out += row("average", report.averages);
  return out;
}

EvalReport parse_report_machine(std::string_view content) {
  std::vector<ProductScores> rows;
  auto lines = detail::split_lines(content);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    auto line = lines[ln];
    if (detail::trim(line).empty() || line.front() == '#') continue;
    auto fields = detail::split(line, '\t');
    auto where = "report line " + std::to_string(ln + 1) + ": ";
    if (fields[0] == "average") continue;
    if (fields[0] != "product" || fields.size() != 8)
      throw ParseError(where + "expected product<TAB>name<TAB>six fractions");
    double v[6];
    for (int i = 0; i < 6; ++i) {
      auto f = detail::trim(fields[static_cast<std::size_t>(i) + 2]);
      auto res = std::from_chars(f.data(), f.data() + f.size(), v[i]);
      if (res.ec != std::errc{} || res.ptr != f.data() + f.size() || v[i] < 0 ||
          v[i] > 1)
        throw ParseError(where + "bad fraction '" + std::string(f) + "'");
    }
    rows.push_back(make_product_scores(std::string(fields[1]),
                                       {v[0], v[1], v[3], v[4]}));
  }
  return build_report(std::move(rows));
}

std::string render_report_table(const EvalReport& report) {
  std::vector<std::pair<std::string, ProductScores>> rows;
  for (const auto& p : report.per_product) rows.emplace_back(p.product, p);
  rows.emplace_back("Average", report.averages);
  return three_blocks(rows);
}

}  // namespace aspectminer
