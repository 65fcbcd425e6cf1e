#ifndef PARAMINE_TRANSDUCE_HPP
#define PARAMINE_TRANSDUCE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "paramine/corpus.hpp"
#include "paramine/lexicon.hpp"
#include "paramine/metrics.hpp"
#include "paramine/retrieval.hpp"
#include "paramine/scorer.hpp"
#include "paramine/selector.hpp"

namespace paramine {

struct LoopConfig {
  int iterations = 10; // R
  int nbest = 5;       // N candidates kept per source sentence
  int top_k_docs = 20;
  int em_iters = 20;
  ScoreWeights weights = ScoreWeights::defaults();
  ThresholdTable thresholds = ThresholdTable::defaults();
  bool allow_shared_targets = false;
  std::filesystem::path seed;
  std::filesystem::path comparable;
  std::filesystem::path dictionary; // optional, empty = none
  std::map<std::string, std::filesystem::path> test_sets;
  int jobs = 0; // 0 = available parallelism

  // Stable hash of the on-disk configuration, used to guard resumes.
  std::uint64_t config_fingerprint = 0;

  void validate() const;
};

// Relative paths in the file are resolved against its directory.
LoopConfig load_config(const std::filesystem::path& path);

struct IterationReport {
  int iteration = 0;
  std::size_t corpus_size = 0; // seed size + mined_count
  std::size_t mined_count = 0; // |T_{i-1}|, the mined pairs trained on
  struct Eval {
    std::string name;
    double nist = 0.0;
    double bleu = 0.0; // in [0,1]; printed x100
  };
  std::vector<Eval> per_test_set;
};

struct MinePassResult {
  std::vector<CandidatePair> candidates; // X_i, merged in (doc_id, index) order
  std::vector<CandidatePair> selected;   // T_i
};

// One labeling + scoring + selecting pass under a fixed lexicon. Linked source docs use their links; others fall back to
// top-k retrieval.
MinePassResult mine_pass(const Lexicon& lex, const BilingualDictionary& dictionary,
                         const ComparableCorpus& comparable, const InvertedIndex& index,
                         const LoopConfig& config);

// The full transductive loop. Writes per-iteration reports, mined pair files
// and a checkpoint under out_dir. T_i replaces T_{i-1} each round; it never
// accumulates. stop_after >= 0 ends the run after that iteration (the resume
// path picks up from the checkpoint).
std::vector<IterationReport> run_loop(const LoopConfig& config,
                                      const std::filesystem::path& out_dir,
                                      bool resume = false, int stop_after = -1);

SentencePair to_sentence_pair(const CandidatePair& c, int iteration);

void write_reports(const std::vector<IterationReport>& reports,
                   const std::filesystem::path& path);
std::string format_report_row(const IterationReport& report);
std::string report_header(const std::vector<IterationReport>& reports);

// Pretty-print a report TSV as an aligned table.
std::string render_report(const std::filesystem::path& tsv_path);

} // namespace paramine

#endif
