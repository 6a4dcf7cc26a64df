#include "aspectminer/summary.hpp"

#include <algorithm>
#include <set>

#include "aspectminer/error.hpp"
#include "text_util.hpp"

namespace aspectminer {

int percent_half_up(std::size_t part, std::size_t whole) {
  if (whole == 0) return 0;
  return static_cast<int>((200 * part + whole) / (2 * whole));
}

Summary generate_summary(std::string product_name,
                         std::span<const AspectGroup> groups,
                         std::span<const SentenceScore> scores,
                         std::span<const std::string> sentence_texts,
                         std::size_t k) {
  Summary summary;
  summary.product_name = std::move(product_name);
  std::size_t positive = 0;
  std::size_t negative = 0;

  auto entries = [&](const std::vector<std::size_t>& ranked) {
    std::vector<SummarySentence> out;
    for (auto s : ranked) {
      if (s >= sentence_texts.size())
        throw InvalidArgument("no text for sentence " + std::to_string(s));
      out.push_back({s, scores[s].total, sentence_texts[s]});
    }
    return out;
  };

  for (const auto& group : groups) {
    SummaryGroup g;
    g.label = group.canonical_label;
    std::vector<std::size_t> pros, cons;
    for (const auto& p : group.pairs) {
      if (p.orientation == Polarity::Positive) {
        ++g.positive_count;
        pros.push_back(p.sentence);
      } else if (p.orientation == Polarity::Negative) {
        ++g.negative_count;
        cons.push_back(p.sentence);
      }
    }
    if (!pros.empty()) g.pros = entries(rank_sentences(std::move(pros), scores, k));
    if (!cons.empty()) g.cons = entries(rank_sentences(std::move(cons), scores, k));
    positive += g.positive_count;
    negative += g.negative_count;
    summary.groups.push_back(std::move(g));
  }

  std::stable_sort(summary.groups.begin(), summary.groups.end(),
                   [](const SummaryGroup& a, const SummaryGroup& b) {
                     auto na = a.positive_count + a.negative_count;
                     auto nb = b.positive_count + b.negative_count;
                     return na != nb ? na > nb : a.label < b.label;
                   });
  if (positive + negative > 0) {
    summary.positive_pct = percent_half_up(positive, positive + negative);
    summary.negative_pct = 100 - summary.positive_pct;
  }
  return summary;
}

SummaryFormat parse_summary_format(std::string_view name) {
  if (name == "text") return SummaryFormat::Text;
  if (name == "machine") return SummaryFormat::Machine;
  if (name == "histogram") return SummaryFormat::Histogram;
  throw InvalidArgument("unknown summary format '" + std::string(name) + "'");
}

namespace {

std::size_t total_count(const Summary& s, bool positive) {
  std::size_t n = 0;
  for (const auto& g : s.groups) n += positive ? g.positive_count : g.negative_count;
  return n;
}

std::string render_text(const Summary& s) {
  const auto pos = total_count(s, true);
  const auto neg = total_count(s, false);
  std::string out = "Product: " + s.product_name + "\n";
  out += "Overall: " + std::to_string(s.positive_pct) + "% positive, " +
         std::to_string(s.negative_pct) + "% negative (" + std::to_string(pos) +
         " positive, " + std::to_string(neg) + " negative opinions)\n";
  for (const auto& g : s.groups) {
    out += "\n== " + g.label + " (" + std::to_string(g.positive_count) +
           " positive, " + std::to_string(g.negative_count) + " negative) ==\n";
    auto list = [&](const char* title, const std::vector<SummarySentence>& items) {
      out += title;
      out += items.empty() ? " none\n" : "\n";
      for (const auto& it : items)
        out += "  [" + std::to_string(it.weight) + "] " + detail::field(it.text) + "\n";
    };
    list("Pros:", g.pros);
    list("Cons:", g.cons);
  }
  return out;
}

std::string bar_pair(const std::string& label, std::size_t width, int pos_pct,
                     int neg_pct) {
  auto line = [&](const std::string& lead, char sign, int pct) {
    const int len = (pct + 1) / 2;  // round(pct / 2), halves up
    std::string l = lead;
    l.resize(width, ' ');
    l += ' ';
    l += sign;
    l += " [";
    l += std::string(static_cast<std::size_t>(len), '=');
    l += std::string(static_cast<std::size_t>(kHistogramWidth - len), ' ');
    l += "] " + std::to_string(pct) + "%\n";
    return l;
  };
  return line(label, '+', pos_pct) + line("", '-', neg_pct);
}

std::string render_histogram(const Summary& s) {
  std::size_t width = 7;  // "overall"
  for (const auto& g : s.groups) width = std::max(width, g.label.size());
  std::string out = "Product: " + s.product_name + "\n";
  out += bar_pair("overall", width, s.positive_pct, s.negative_pct);
  for (const auto& g : s.groups) {
    const auto n = g.positive_count + g.negative_count;
    const int pos = percent_half_up(g.positive_count, n);
    out += bar_pair(g.label, width, pos, n > 0 ? 100 - pos : 0);
  }
  return out;
}

std::string render_machine(const Summary& s) {
  std::string out = "summary\t" + detail::field(s.product_name) + "\t" +
                    std::to_string(total_count(s, true)) + "\t" +
                    std::to_string(total_count(s, false)) + "\t" +
                    std::to_string(s.positive_pct) + "\t" +
                    std::to_string(s.negative_pct) + "\n";
  for (const auto& g : s.groups) {
    const auto label = detail::field(g.label);
    out += "group\t" + label + "\t" + std::to_string(g.positive_count) + "\t" +
           std::to_string(g.negative_count) + "\n";
    auto rows = [&](const char* polarity, const std::vector<SummarySentence>& items) {
      for (const auto& it : items)
        out += "sentence\t" + label + "\t" + polarity + "\t" +
               std::to_string(it.weight) + "\t" + detail::field(it.text) + "\n";
    };
    rows("positive", g.pros);
    rows("negative", g.cons);
  }
  return out;
}

}  // namespace

std::string render(const Summary& summary, SummaryFormat format) {
  switch (format) {
    case SummaryFormat::Text: return render_text(summary);
    case SummaryFormat::Machine: return render_machine(summary);
    case SummaryFormat::Histogram: return render_histogram(summary);
  }
  throw InvalidArgument("unknown summary format");
}

}  // namespace aspectminer
