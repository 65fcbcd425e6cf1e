#ifndef PARAMINE_SELECTOR_HPP
#define PARAMINE_SELECTOR_HPP

#include <limits>
#include <vector>

#include "paramine/corpus.hpp"
#include "paramine/decoder.hpp"
#include "paramine/scorer.hpp"

namespace paramine {

// Length-bucketed selection thresholds; short targets get the highest bar.
struct ThresholdTable {
  struct Bucket {
    int max_target_length; // inclusive; INT_MAX for the final bucket
    double threshold;
  };
  std::vector<Bucket> buckets;

  static ThresholdTable defaults() {
    return ThresholdTable{{{5, 4.0},
                           {15, 2.5},
                           {30, 2.0},
                           {std::numeric_limits<int>::max(), 1.8}}};
  }
  void validate() const;
  double threshold_for(int target_length) const;
};

struct CandidatePair {
  Sentence source;
  GlossTranslation gloss;
  Sentence target;
  MatchBreakdown breakdown;
};

// n highest-scoring candidates for one source sentence, ties broken by
// (lower target doc_id, lower sentence index).
std::vector<CandidatePair> top_n(std::vector<CandidatePair> candidates, int n);

// A candidate survives when its score strictly exceeds the threshold for its
// target length, is the strict maximum among candidates sharing its source,
// and (unless allow_shared_targets) the strict maximum among candidates
// sharing its target. Output ordered by (source doc_id, source index).
std::vector<CandidatePair> select(const std::vector<CandidatePair>& candidates,
                                  const ThresholdTable& thresholds,
                                  bool allow_shared_targets = false);

} // namespace paramine

#endif
