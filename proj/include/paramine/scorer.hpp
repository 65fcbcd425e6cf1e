#ifndef PARAMINE_SCORER_HPP
#define PARAMINE_SCORER_HPP

#include <string>
#include <vector>

#include "paramine/corpus.hpp"
#include "paramine/decoder.hpp"

namespace paramine {

struct ScoreWeights {
  std::vector<double> alpha; // strictly increasing, one weight per n-gram order
  double beta_number = 2.0;
  double beta_propn = 2.0;
  int max_n = 4;

  static ScoreWeights defaults() { return ScoreWeights{{1.0, 2.0, 3.0, 4.0}, 2.0, 2.0, 4}; }
  void validate() const;
};

struct MatchBreakdown {
  std::vector<long> ngram_counts; // C_1 .. C_max_n
  long number_matches = 0;
  long propn_matches = 0;
  double length_factor = 1.0;
  double score = 0.0;
};

// Lowercase, then apply the first matching suffix rule out of
// ies->y, es->, s->, ing->, ed-> when the remaining stem keeps >= 3 chars.
std::string stem(const std::string& token);

// Clipped k-gram match count. Case-insensitive for k >= 2; for k == 1 with
// stem_unigrams, tokens also match when their stems are equal.
long ngram_matches(const std::vector<std::string>& gloss_tokens,
                   const std::vector<std::string>& target_tokens, int k, bool stem_unigrams);

// Weighted n-gram similarity between a gloss translation and a candidate
// target sentence, with number and proper-noun bonuses, divided by
// max(|gloss|, |target|). The numerator is accumulated left-to-right in
// k order, then the number and proper-noun terms, then divided.
MatchBreakdown similarity(const GlossTranslation& gloss, const Sentence& target,
                          const ScoreWeights& weights);

} // namespace paramine

#endif
