#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "paramine/decoder.hpp"
#include "paramine/transduce.hpp"

namespace fs = std::filesystem;
using namespace paramine;

namespace {

int cmd_train(const fs::path& seed_path, const fs::path& dict_path, int em_iters,
              const fs::path& out) {
  ParallelCorpus seed = load_parallel(seed_path);
  BilingualDictionary dict;
  if (!dict_path.empty()) dict = load_dictionary(dict_path);
  Lexicon lex = estimate(seed, dict, em_iters);
  save_lexicon(lex, out);
  std::cerr << "trained on " << seed.size() << " pairs, " << lex.probs.size()
            << " source tokens, final log-likelihood " << lex.final_log_likelihood << "\n";
  return 0;
}

int cmd_gloss(const fs::path& lexicon_path, const fs::path& dict_path) {
  Lexicon lex;
  if (!lexicon_path.empty()) lex = load_lexicon(lexicon_path);
  BilingualDictionary dict;
  if (!dict_path.empty()) dict = load_dictionary(dict_path);
  std::string line;
  while (std::getline(std::cin, line)) {
    Sentence s;
    std::istringstream iss(line);
    std::string token;
    while (iss >> token) s.tokens.push_back(token);
    if (s.tokens.empty()) {
      std::cout << "\n";
      continue;
    }
    GlossTranslation g = gloss(lex, dict, s);
    for (std::size_t i = 0; i < g.tokens.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << g.tokens[i];
    }
    std::cout << '\n';
  }
  return 0;
}

void write_candidate_audit(const std::vector<CandidatePair>& candidates, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << "source\ttarget\tscore";
  std::size_t max_n = candidates.empty() ? 0 : candidates.front().breakdown.ngram_counts.size();
  for (std::size_t k = 1; k <= max_n; ++k) out << "\tC" << k;
  out << "\tnumbers\tpropn\tlength_factor\n";
  char buf[32];
  for (const auto& c : candidates) {
    std::snprintf(buf, sizeof(buf), "%.6f", c.breakdown.score);
    out << sentence_id(c.source) << '\t' << sentence_id(c.target) << '\t' << buf;
    for (long count : c.breakdown.ngram_counts) out << '\t' << count;
    out << '\t' << c.breakdown.number_matches << '\t' << c.breakdown.propn_matches << '\t'
        << c.breakdown.length_factor << '\n';
  }
}

int cmd_mine(const fs::path& config_path, const fs::path& lexicon_path, const fs::path& out_dir,
             int jobs, int top_k, int nbest) {
  LoopConfig config = load_config(config_path);
  if (jobs > 0) config.jobs = jobs;
  if (top_k > 0) config.top_k_docs = top_k;
  if (nbest > 0) config.nbest = nbest;
  Lexicon lex = load_lexicon(lexicon_path);
  BilingualDictionary dict;
  if (!config.dictionary.empty()) dict = load_dictionary(config.dictionary);
  ComparableCorpus comparable = load_comparable(config.comparable);
  InvertedIndex index = build_index(comparable);

  MinePassResult pass = mine_pass(lex, dict, comparable, index, config);

  fs::create_directories(out_dir);
  ParallelCorpus selected;
  for (const auto& c : pass.selected) selected.pairs.push_back(to_sentence_pair(c, 0));
  write_parallel(selected, out_dir / "selected.jsonl");
  write_candidate_audit(pass.candidates, out_dir / "candidates.tsv");
  std::cerr << pass.candidates.size() << " candidates scored, " << pass.selected.size()
            << " pairs selected\n";
  return 0;
}

int cmd_loop(const fs::path& config_path, const fs::path& out_dir, bool resume, int jobs) {
  LoopConfig config = load_config(config_path);
  if (jobs > 0) config.jobs = jobs;
  auto reports = run_loop(config, out_dir, resume);
  std::cerr << reports.size() << " iteration reports written to "
            << (out_dir / "report.tsv").string() << "\n";
  return 0;
}

int cmd_eval(const fs::path& test_set_path, const fs::path& lexicon_path,
             const fs::path& dict_path, const fs::path& hyp_path) {
  TestSet ts = load_test_set(test_set_path, "test");
  std::vector<TokenList> hyps;
  std::vector<std::vector<TokenList>> refs;
  for (const auto& seg : ts.segments) refs.push_back(seg.refs);

  if (!hyp_path.empty()) {
    std::ifstream in(hyp_path);
    if (!in) throw DataError("cannot open " + hyp_path.string());
    std::string line;
    while (std::getline(in, line)) {
      TokenList tokens;
      std::istringstream iss(line);
      std::string token;
      while (iss >> token) tokens.push_back(token);
      hyps.push_back(std::move(tokens));
    }
  } else {
    if (lexicon_path.empty()) throw UsageError("eval needs --lexicon or --hyp");
    Lexicon lex = load_lexicon(lexicon_path);
    BilingualDictionary dict;
    if (!dict_path.empty()) dict = load_dictionary(dict_path);
    for (const auto& seg : ts.segments) {
      Sentence s;
      s.tokens = seg.src;
      hyps.push_back(gloss(lex, dict, s).tokens);
    }
  }

  double nist_score = nist(hyps, refs);
  double bleu_score = bleu(hyps, refs);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "NIST %.4f\tBLEU %.2f", nist_score, bleu_score * 100.0);
  std::cout << buf << '\n';
  return 0;
}

int cmd_report(const fs::path& report_path) {
  std::cout << render_report(report_path);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel sentence mining from comparable corpora by transductive learning"};
  app.require_subcommand(1);

  fs::path seed, dict_path, lexicon_path, out, config_path, test_set, hyp_path, report_path;
  int em_iters = 20, jobs = 0, top_k = 0, nbest = 0;
  bool resume = false;

  auto* train = app.add_subcommand("train", "Estimate a translation lexicon by EM");
  train->add_option("--seed", seed, "seed parallel corpus (JSONL)")->required();
  train->add_option("--dictionary", dict_path, "bilingual dictionary TSV");
  train->add_option("--em-iters", em_iters, "EM iterations")->check(CLI::PositiveNumber);
  train->add_option("--out", out, "output lexicon TSV")->required();

  auto* gloss_cmd = app.add_subcommand("gloss", "Gloss-translate stdin line by line");
  gloss_cmd->add_option("--lexicon", lexicon_path, "lexicon TSV");
  gloss_cmd->add_option("--dictionary", dict_path, "bilingual dictionary TSV");

  auto* mine = app.add_subcommand("mine", "One mining pass with a fixed lexicon");
  mine->add_option("--config", config_path, "pipeline config JSON")->required();
  mine->add_option("--lexicon", lexicon_path, "lexicon TSV")->required();
  mine->add_option("--out", out, "output directory")->required();
  mine->add_option("--jobs", jobs, "worker count");
  mine->add_option("--top-k", top_k, "retrieved target docs per source doc");
  mine->add_option("--nbest", nbest, "candidates kept per source sentence");

  auto* loop = app.add_subcommand("loop", "Run the full transductive mining loop");
  loop->add_option("--config", config_path, "pipeline config JSON")->required();
  loop->add_option("--out", out, "output directory")->required();
  loop->add_flag("--resume", resume, "resume from checkpoint in the output directory");
  loop->add_option("--jobs", jobs, "worker count");

  auto* eval = app.add_subcommand("eval", "Score a lexicon or hypothesis file on a test set");
  eval->add_option("--test-set", test_set, "test set JSONL")->required();
  eval->add_option("--lexicon", lexicon_path, "lexicon TSV");
  eval->add_option("--dictionary", dict_path, "bilingual dictionary TSV");
  eval->add_option("--hyp", hyp_path, "hypothesis file, one tokenized sentence per line");

  auto* report = app.add_subcommand("report", "Pretty-print a report TSV");
  report->add_option("report", report_path, "report TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*train) return cmd_train(seed, dict_path, em_iters, out);
    if (*gloss_cmd) return cmd_gloss(lexicon_path, dict_path);
    if (*mine) return cmd_mine(config_path, lexicon_path, out, jobs, top_k, nbest);
    if (*loop) return cmd_loop(config_path, out, resume, jobs);
    if (*eval) return cmd_eval(test_set, lexicon_path, dict_path, hyp_path);
    if (*report) return cmd_report(report_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
