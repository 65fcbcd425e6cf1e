#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "paramine/decoder.hpp"
#include "paramine/transduce.hpp"

namespace py = pybind11;
using namespace paramine;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallel sentence mining from comparable corpora";

  py::register_exception<DataError>(m, "DataError");
  py::register_exception<UsageError>(m, "UsageError");

  py::class_<Sentence>(m, "Sentence")
      .def(py::init([](std::vector<std::string> tokens, std::string doc_id, int index) {
             Sentence s;
             s.tokens = std::move(tokens);
             s.doc_id = std::move(doc_id);
             s.index = index;
             return s;
           }),
           py::arg("tokens"), py::arg("doc_id") = "", py::arg("index") = 0)
      .def_readwrite("tokens", &Sentence::tokens)
      .def_readwrite("doc_id", &Sentence::doc_id)
      .def_readwrite("index", &Sentence::index);

  py::class_<SentencePair>(m, "SentencePair")
      .def_readonly("src", &SentencePair::src)
      .def_readonly("tgt", &SentencePair::tgt)
      .def_property_readonly("mined_iteration",
                             [](const SentencePair& p) { return p.origin.mined_iteration; });

  py::class_<ParallelCorpus>(m, "ParallelCorpus")
      .def_readonly("pairs", &ParallelCorpus::pairs)
      .def("__len__", &ParallelCorpus::size);

  py::class_<ComparableCorpus>(m, "ComparableCorpus")
      .def_property_readonly("source_doc_ids",
                             [](const ComparableCorpus& c) {
                               std::vector<std::string> ids;
                               for (const auto& [id, d] : c.source_docs) ids.push_back(id);
                               return ids;
                             })
      .def_property_readonly("target_doc_ids", [](const ComparableCorpus& c) {
        std::vector<std::string> ids;
        for (const auto& [id, d] : c.target_docs) ids.push_back(id);
        return ids;
      });

  py::class_<BilingualDictionary>(m, "BilingualDictionary")
      .def(py::init<>())
      .def("lookup", &BilingualDictionary::lookup);

  py::class_<Lexicon>(m, "Lexicon")
      .def(py::init<>())
      .def_readonly("probs", &Lexicon::probs)
      .def_readonly("em_iterations", &Lexicon::em_iterations)
      .def_readonly("final_log_likelihood", &Lexicon::final_log_likelihood)
      .def_readonly("log_likelihoods", &Lexicon::log_likelihoods);

  py::class_<GlossTranslation>(m, "GlossTranslation")
      .def_readonly("tokens", &GlossTranslation::tokens)
      .def_readonly("model_score", &GlossTranslation::model_score);

  py::class_<ScoreWeights>(m, "ScoreWeights")
      .def(py::init(&ScoreWeights::defaults))
      .def_readwrite("alpha", &ScoreWeights::alpha)
      .def_readwrite("beta_number", &ScoreWeights::beta_number)
      .def_readwrite("beta_propn", &ScoreWeights::beta_propn)
      .def_readwrite("max_n", &ScoreWeights::max_n);

  py::class_<MatchBreakdown>(m, "MatchBreakdown")
      .def_readonly("ngram_counts", &MatchBreakdown::ngram_counts)
      .def_readonly("number_matches", &MatchBreakdown::number_matches)
      .def_readonly("propn_matches", &MatchBreakdown::propn_matches)
      .def_readonly("length_factor", &MatchBreakdown::length_factor)
      .def_readonly("score", &MatchBreakdown::score);

  py::class_<IterationReport::Eval>(m, "Eval")
      .def_readonly("name", &IterationReport::Eval::name)
      .def_readonly("nist", &IterationReport::Eval::nist)
      .def_readonly("bleu", &IterationReport::Eval::bleu);

  py::class_<IterationReport>(m, "IterationReport")
      .def_readonly("iteration", &IterationReport::iteration)
      .def_readonly("corpus_size", &IterationReport::corpus_size)
      .def_readonly("mined_count", &IterationReport::mined_count)
      .def_readonly("per_test_set", &IterationReport::per_test_set);

  m.def("load_parallel", &load_parallel, py::arg("path"));
  m.def("write_parallel", &write_parallel, py::arg("corpus"), py::arg("path"));
  m.def("load_comparable", &load_comparable, py::arg("path"));
  m.def("load_dictionary", &load_dictionary, py::arg("path"));

  m.def("estimate", &estimate, py::arg("corpus"), py::arg("dictionary"), py::arg("em_iters"));
  m.def("translate_token", &translate_token, py::arg("lexicon"), py::arg("dictionary"),
        py::arg("token"));
  m.def("save_lexicon", &save_lexicon, py::arg("lexicon"), py::arg("path"));
  m.def("load_lexicon", &load_lexicon, py::arg("path"));

  m.def("gloss", &gloss, py::arg("lexicon"), py::arg("dictionary"), py::arg("sentence"));

  m.def("stem", &stem, py::arg("token"));
  m.def("ngram_matches", &ngram_matches, py::arg("gloss_tokens"), py::arg("target_tokens"),
        py::arg("k"), py::arg("stem_unigrams") = false);
  m.def(
      "similarity",
      [](const std::vector<std::string>& gloss_tokens, const std::vector<std::string>& target,
         const ScoreWeights& weights) {
        GlossTranslation g;
        g.tokens = gloss_tokens;
        Sentence t;
        t.tokens = target;
        t.lang = Lang::Target;
        return similarity(g, t, weights);
      },
      py::arg("gloss_tokens"), py::arg("target_tokens"), py::arg("weights"));

  m.def("bleu", &bleu, py::arg("hypotheses"), py::arg("references"), py::arg("max_n") = 4);
  m.def("nist", &nist, py::arg("hypotheses"), py::arg("references"), py::arg("max_n") = 5);

  m.def("load_config", &load_config, py::arg("path"));
  m.def("run_loop", &run_loop, py::arg("config"), py::arg("out_dir"),
        py::arg("resume") = false, py::arg("stop_after") = -1);

  py::class_<LoopConfig>(m, "LoopConfig")
      .def_readwrite("iterations", &LoopConfig::iterations)
      .def_readwrite("nbest", &LoopConfig::nbest)
      .def_readwrite("top_k_docs", &LoopConfig::top_k_docs)
      .def_readwrite("em_iters", &LoopConfig::em_iters)
      .def_readwrite("jobs", &LoopConfig::jobs);
}
