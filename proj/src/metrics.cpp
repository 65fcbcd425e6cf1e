#include "paramine/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>

#include <json.hpp>

#include "paramine/util.hpp"

namespace paramine {

using nlohmann::json;

TestSet load_test_set(const std::filesystem::path& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  TestSet ts;
  ts.name = name;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
    TestSet::Segment seg;
    seg.src = obj.at("src").get<std::vector<std::string>>();
    seg.refs = obj.at("refs").get<std::vector<std::vector<std::string>>>();
    if (seg.refs.empty())
      throw DataError("line " + std::to_string(line_no) + ": segment has no references");
    ts.segments.push_back(std::move(seg));
  }
  return ts;
}

namespace {

std::string gram_key(const std::vector<std::string>& tokens, std::size_t start, int n) {
  std::string key;
  for (int j = 0; j < n; ++j) {
    if (j) key += '\x1f';
    key += tokens[start + j];
  }
  return key;
}

std::map<std::string, long> gram_counts(const std::vector<std::string>& tokens, int n) {
  std::map<std::string, long> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) ++counts[gram_key(tokens, i, n)];
  return counts;
}

void check_sizes(const std::vector<TokenList>& hypotheses,
                 const std::vector<std::vector<TokenList>>& references, int max_n) {
  if (hypotheses.size() != references.size())
    throw DataError("hypothesis count does not match segment count");
  if (max_n < 1) throw UsageError("max_n must be >= 1");
  for (const auto& refs : references)
    if (refs.empty()) throw DataError("segment has no references");
}

} // namespace

double bleu(const std::vector<TokenList>& hypotheses,
            const std::vector<std::vector<TokenList>>& references, int max_n) {
  check_sizes(hypotheses, references, max_n);
  if (hypotheses.empty()) return 0.0;

  long c = 0, r = 0;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    long hyp_len = static_cast<long>(hypotheses[i].size());
    c += hyp_len;
    // closest reference length, ties to the shorter
    long best_len = static_cast<long>(references[i][0].size());
    for (const auto& ref : references[i]) {
      long len = static_cast<long>(ref.size());
      long d = std::labs(len - hyp_len), best_d = std::labs(best_len - hyp_len);
      if (d < best_d || (d == best_d && len < best_len)) best_len = len;
    }
    r += best_len;
  }
  if (c == 0) return 0.0;

  double log_precision_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    long match = 0, total = 0;
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
      auto hyp_grams = gram_counts(hypotheses[i], n);
      std::map<std::string, long> clip;
      for (const auto& ref : references[i])
        for (const auto& [g, count] : gram_counts(ref, n))
          clip[g] = std::max(clip[g], count);
      for (const auto& [g, count] : hyp_grams) {
        auto it = clip.find(g);
        if (it != clip.end()) match += std::min(count, it->second);
        total += count;
      }
    }
    if (match == 0 || total == 0) return 0.0;
    log_precision_sum += std::log(static_cast<double>(match) / static_cast<double>(total));
  }

  double bp = std::exp(std::min(0.0, 1.0 - static_cast<double>(r) / static_cast<double>(c)));
  return bp * std::exp(log_precision_sum / max_n);
}

double nist(const std::vector<TokenList>& hypotheses,
            const std::vector<std::vector<TokenList>>& references, int max_n) {
  check_sizes(hypotheses, references, max_n);
  if (hypotheses.empty()) return 0.0;

  // pooled reference n-gram statistics for information weights
  std::vector<std::map<std::string, long>> ref_counts(max_n + 1);
  long ref_words = 0;
  for (const auto& refs : references) {
    for (const auto& ref : refs) {
      ref_words += static_cast<long>(ref.size());
      for (int n = 1; n <= max_n; ++n)
        for (const auto& [g, count] : gram_counts(ref, n)) ref_counts[n][g] += count;
    }
  }
  if (ref_words == 0) return 0.0;

  auto info = [&](const std::string& g, int n) {
    long denom = ref_counts[n].at(g);
    long numer;
    if (n == 1) {
      numer = ref_words;
    } else {
      std::size_t cut = g.rfind('\x1f');
      numer = ref_counts[n - 1].at(g.substr(0, cut));
    }
    return std::log2(static_cast<double>(numer) / static_cast<double>(denom));
  };

  double total_score = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    double matched_info = 0.0;
    long hyp_grams_total = 0;
    for (std::size_t i = 0; i < hypotheses.size(); ++i) {
      std::map<std::string, long> clip;
      for (const auto& ref : references[i])
        for (const auto& [g, count] : gram_counts(ref, n))
          clip[g] = std::max(clip[g], count);
      for (const auto& [g, count] : gram_counts(hypotheses[i], n)) {
        hyp_grams_total += count;
        auto it = clip.find(g);
        if (it != clip.end())
          matched_info += static_cast<double>(std::min(count, it->second)) * info(g, n);
      }
    }
    if (hyp_grams_total > 0) total_score += matched_info / static_cast<double>(hyp_grams_total);
  }

  long c = 0;
  double mean_ref_len_sum = 0.0;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    c += static_cast<long>(hypotheses[i].size());
    double sum = 0.0;
    for (const auto& ref : references[i]) sum += static_cast<double>(ref.size());
    mean_ref_len_sum += sum / static_cast<double>(references[i].size());
  }
  double ratio = static_cast<double>(c) / mean_ref_len_sum;
  double brevity = 1.0;
  if (ratio < 1.0) {
    static const double beta = std::log(0.5) / (std::log(2.0 / 3.0) * std::log(2.0 / 3.0));
    double lr = std::log(ratio);
    brevity = std::exp(beta * lr * lr);
  }
  return total_score * brevity;
}

} // namespace paramine
