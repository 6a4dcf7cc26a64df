#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "aspectminer/error.hpp"
#include "aspectminer/eval.hpp"
#include "aspectminer/pipeline.hpp"
#include "aspectminer/summary.hpp"

namespace py = pybind11;
using namespace aspectminer;

namespace {

using TokenTuple = std::pair<std::string, std::string>;

std::vector<TokenTuple> token_tuples(const TaggedSentence& s) {
  std::vector<TokenTuple> out;
  for (const auto& t : s.tokens) out.emplace_back(t.surface, std::string(to_string(t.tag)));
  return out;
}

py::dict pair_dict(const AspectOpinionPair& p) {
  py::dict d;
  d["sentence"] = p.sentence;
  d["aspect"] = p.aspect_surface;
  d["aspect_text"] = p.aspect_text;
  d["opinion"] = p.opinion_surface;
  d["polarity"] = std::string(to_string(p.orientation));
  d["aspect_index"] = p.aspect_index;
  d["opinion_index"] = p.opinion_index;
  d["pattern"] = p.pattern_name;
  return d;
}

py::dict scores_dict(const MatchScores& s) {
  py::dict d;
  d["aspect_precision"] = s.aspect_p;
  d["aspect_recall"] = s.aspect_r;
  d["aspect_f"] = f_measure(s.aspect_p, s.aspect_r);
  d["opinion_precision"] = s.opinion_p;
  d["opinion_recall"] = s.opinion_r;
  d["opinion_f"] = f_measure(s.opinion_p, s.opinion_r);
  return d;
}

// Bundled resources plus the operations that need them.
class Pipeline {
 public:
  explicit Pipeline(const std::string& data_dir)
      : r_(Resources::load(ResourcePaths::bundled(data_dir))) {}

  std::vector<TokenTuple> tag(const std::string& text) const {
    return token_tuples(r_.tagger.tag_text(text));
  }

  std::vector<py::dict> extract(const std::string& pretagged, bool fallback,
                                bool conjunction) const {
    std::vector<TaggedSentence> tagged;
    corpus_from_pretagged(pretagged, "input", &tagged);
    std::vector<py::dict> out;
    for (const auto& p : extract_corpus(tagged, r_, {fallback, conjunction}))
      out.push_back(pair_dict(p));
    return out;
  }

  std::string summarize(const std::string& corpus_text,
                        const std::optional<std::string>& pretagged,
                        const std::string& product, std::size_t top_k,
                        const std::string& format) const {
    const auto fmt = parse_summary_format(format);
    auto corpus = parse_corpus_file(corpus_text, product);
    auto tagged = pretagged ? attach_pretagged(corpus, *pretagged) : tag_corpus(corpus, r_.tagger);
    return render(summarize_corpus(corpus, tagged, r_, top_k).summary, fmt);
  }

  py::dict evaluate(const std::string& corpus_text,
                    const std::optional<std::string>& pretagged) const {
    auto corpus = parse_corpus_file(corpus_text, "input");
    auto tagged = pretagged ? attach_pretagged(corpus, *pretagged) : tag_corpus(corpus, r_.tagger);
    auto scores = evaluate_extraction(extract_corpus(tagged, r_), corpus);
    py::dict d;
    d["subset"] = scores_dict(scores.subset);
    d["exact"] = scores_dict(scores.exact);
    return d;
  }

  int weight(const std::string& pretagged_line) const {
    return weight_sentence(parse_pretagged(pretagged_line), r_.weights, r_.verbs).total;
  }

 private:
  Resources r_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Aspect-based opinion mining over product reviews";

  // Translators registered later are tried first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  m.def("default_data_dir", &default_data_dir);
  m.def("tokenize", [](const std::string& s) { return tokenize(s); }, py::arg("text"));
  m.def("parse_pretagged",
        [](const std::string& line) { return token_tuples(parse_pretagged(line)); },
        py::arg("line"));
  m.def("f_measure", &f_measure, py::arg("p"), py::arg("r"));
  m.def("f_consistent_with_rounding", &f_consistent_with_rounding, py::arg("p"),
        py::arg("r"), py::arg("f"), py::arg("decimals") = 2);
  m.def("percent_half_up", &percent_half_up, py::arg("part"), py::arg("whole"));

  m.def(
      "paired_t_test",
      [](const std::vector<double>& a, const std::vector<double>& b, bool two_tailed) {
        auto r = paired_t_test(a, b, two_tailed);
        py::dict d;
        d["t"] = r.t_statistic;
        d["df"] = r.degrees_of_freedom;
        d["p"] = r.p_value;
        d["degenerate"] = r.degenerate;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("two_tailed") = true);

  m.def(
      "mine",
      [](const std::string& pretagged, std::size_t min_support, std::size_t max_len) {
        std::vector<TaggedSentence> tagged;
        corpus_from_pretagged(pretagged, "input", &tagged);
        std::vector<py::tuple> out;
        for (const auto& p : mine_frequent_tag_sets(tagged, min_support, max_len)) {
          std::vector<std::string> tags;
          for (auto t : p.tags) tags.emplace_back(to_string(t));
          out.push_back(py::make_tuple(py::tuple(py::cast(tags)), p.support, p.support_ratio));
        }
        return out;
      },
      py::arg("pretagged"), py::arg("min_support") = 3, py::arg("max_len") = 6);

  py::class_<Pipeline>(m, "Pipeline")
      .def(py::init<const std::string&>(), py::arg("data_dir"))
      .def("tag", &Pipeline::tag, py::arg("text"))
      .def("extract", &Pipeline::extract, py::arg("pretagged"), py::arg("fallback") = true,
           py::arg("conjunction") = true)
      .def("summarize", &Pipeline::summarize, py::arg("corpus"),
           py::arg("pretagged") = std::nullopt, py::arg("product") = "product",
           py::arg("top_k") = 5, py::arg("format") = "text")
      .def("evaluate", &Pipeline::evaluate, py::arg("corpus"),
           py::arg("pretagged") = std::nullopt)
      .def("weight", &Pipeline::weight, py::arg("pretagged_line"));
}
