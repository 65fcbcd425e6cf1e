#include "paramine/selector.hpp"

#include <algorithm>
#include <map>

namespace paramine {

void ThresholdTable::validate() const {
  if (buckets.empty()) throw UsageError("threshold table is empty");
  int prev = 0;
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    if (buckets[i].threshold <= 0.0) throw UsageError("thresholds must be positive");
    if (i > 0 && buckets[i].max_target_length <= prev)
      throw UsageError("threshold buckets must have strictly increasing lengths");
    prev = buckets[i].max_target_length;
  }
  if (buckets.back().max_target_length != std::numeric_limits<int>::max())
    throw UsageError("final threshold bucket must be unbounded");
}

double ThresholdTable::threshold_for(int target_length) const {
  for (const auto& bucket : buckets)
    if (target_length <= bucket.max_target_length) return bucket.threshold;
  return buckets.back().threshold;
}

std::vector<CandidatePair> top_n(std::vector<CandidatePair> candidates, int n) {
  if (n < 1) throw UsageError("n must be >= 1");
  std::sort(candidates.begin(), candidates.end(), [](const CandidatePair& a,
                                                     const CandidatePair& b) {
    if (a.breakdown.score != b.breakdown.score) return a.breakdown.score > b.breakdown.score;
    if (a.target.doc_id != b.target.doc_id) return a.target.doc_id < b.target.doc_id;
    return a.target.index < b.target.index;
  });
  if (static_cast<int>(candidates.size()) > n) candidates.resize(n);
  return candidates;
}

std::vector<CandidatePair> select(const std::vector<CandidatePair>& candidates,
                                  const ThresholdTable& thresholds,
                                  bool allow_shared_targets) {
  thresholds.validate();

  struct Best {
    double score = -1.0;
    int count = 0;
  };
  std::map<std::pair<std::string, int>, Best> by_source, by_target;
  auto update = [](Best& best, double score) {
    if (score > best.score) {
      best.score = score;
      best.count = 1;
    } else if (score == best.score) {
      ++best.count;
    }
  };
  for (const auto& c : candidates) {
    update(by_source[{c.source.doc_id, c.source.index}], c.breakdown.score);
    update(by_target[{c.target.doc_id, c.target.index}], c.breakdown.score);
  }

  std::vector<CandidatePair> selected;
  for (const auto& c : candidates) {
    double score = c.breakdown.score;
    if (score <= thresholds.threshold_for(static_cast<int>(c.target.tokens.size()))) continue;
    const Best& src = by_source.at({c.source.doc_id, c.source.index});
    if (score != src.score || src.count != 1) continue;
    if (!allow_shared_targets) {
      const Best& tgt = by_target.at({c.target.doc_id, c.target.index});
      if (score != tgt.score || tgt.count != 1) continue;
    }
    selected.push_back(c);
  }
  std::sort(selected.begin(), selected.end(), [](const CandidatePair& a, const CandidatePair& b) {
    if (a.source.doc_id != b.source.doc_id) return a.source.doc_id < b.source.doc_id;
    return a.source.index < b.source.index;
  });
  return selected;
}

} // namespace paramine
