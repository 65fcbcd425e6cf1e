#ifndef PARAMINE_LEXICON_HPP
#define PARAMINE_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "paramine/corpus.hpp"

namespace paramine {

// Word-translation model p(target | source) estimated by EM.
struct Lexicon {
  // source token -> (target token -> probability); each inner map sums to 1
  std::map<std::string, std::map<std::string, double>> probs;
  std::uint64_t trained_on_hash = 0;
  std::size_t trained_on_pairs = 0;
  int em_iterations = 0;
  double final_log_likelihood = 0.0;
  // log-likelihood of the training corpus under the parameters entering
  // each iteration; non-decreasing by the EM guarantee
  std::vector<double> log_likelihoods;
};

// EM over sentence pairs plus one pseudo-pair per dictionary entry.
// Uniform initialization over co-occurring vocabulary, no null word.
Lexicon estimate(const ParallelCorpus& corpus, const BilingualDictionary& dictionary,
                 int em_iters);

// argmax over lexicon entries, then first dictionary translation, then the
// token itself. Total; ties broken by lexicographic target token.
std::string translate_token(const Lexicon& lex, const BilingualDictionary& dictionary,
                            const std::string& token);

// TSV: source TAB target TAB probability (6 decimals), sorted by source
// then descending probability.
void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);
Lexicon load_lexicon(const std::filesystem::path& path);

} // namespace paramine

#endif
