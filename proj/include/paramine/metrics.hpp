#ifndef PARAMINE_METRICS_HPP
#define PARAMINE_METRICS_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace paramine {

struct TestSet {
  struct Segment {
    std::vector<std::string> src;
    std::vector<std::vector<std::string>> refs; // 1..4 references
  };
  std::string name;
  std::vector<Segment> segments;
};

TestSet load_test_set(const std::filesystem::path& path, const std::string& name);

using TokenList = std::vector<std::string>;

// Corpus-level BLEU in [0,1]: clipped modified n-gram precisions, geometric
// mean, brevity penalty against closest reference lengths. Unsmoothed: any
// zero aggregate precision gives 0.
double bleu(const std::vector<TokenList>& hypotheses,
            const std::vector<std::vector<TokenList>>& references, int max_n = 4);

// NIST score: information-weighted n-gram match means summed over orders,
// times the NIST brevity factor (0.5 at c/r = 2/3).
double nist(const std::vector<TokenList>& hypotheses,
            const std::vector<std::vector<TokenList>>& references, int max_n = 5);

} // namespace paramine

#endif
