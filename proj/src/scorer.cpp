#include "paramine/scorer.hpp"

#include <algorithm>
#include <map>

namespace paramine {

void ScoreWeights::validate() const {
  if (max_n < 1) throw UsageError("max_n must be >= 1");
  if (static_cast<int>(alpha.size()) != max_n)
    throw UsageError("alpha must have max_n entries");
  for (int i = 0; i < max_n; ++i) {
    if (alpha[i] <= 0.0) throw UsageError("alpha weights must be positive");
    if (i > 0 && alpha[i] <= alpha[i - 1])
      throw UsageError("alpha weights must be strictly increasing");
  }
  if (beta_number <= 0.0 || beta_propn <= 0.0)
    throw UsageError("beta weights must be positive");
}

std::string stem(const std::string& token) {
  std::string s = lowercase_ascii(token);
  struct Rule {
    const char* suffix;
    const char* replacement;
  };
  static const Rule rules[] = {{"ies", "y"}, {"es", ""}, {"s", ""}, {"ing", ""}, {"ed", ""}};
  for (const auto& rule : rules) {
    std::string_view suffix(rule.suffix);
    if (s.size() > suffix.size() &&
        s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0 &&
        s.size() - suffix.size() >= 3) {
      return s.substr(0, s.size() - suffix.size()) + rule.replacement;
    }
  }
  return s;
}

namespace {

// k-gram key; unigrams use the stem or lowercase form, higher orders join
// lowercased tokens.
std::map<std::string, long> gram_counts(const std::vector<std::string>& tokens, int k,
                                        bool stem_unigrams) {
  std::map<std::string, long> counts;
  if (static_cast<int>(tokens.size()) < k) return counts;
  for (std::size_t i = 0; i + k <= tokens.size(); ++i) {
    std::string key;
    if (k == 1) {
      key = stem_unigrams ? stem(tokens[i]) : lowercase_ascii(tokens[i]);
    } else {
      for (int j = 0; j < k; ++j) {
        if (j) key += '\x1f';
        key += lowercase_ascii(tokens[i + j]);
      }
    }
    ++counts[key];
  }
  return counts;
}

long clipped_overlap(const std::map<std::string, long>& a, const std::map<std::string, long>& b) {
  long total = 0;
  for (const auto& [key, count] : a) {
    auto it = b.find(key);
    if (it != b.end()) total += std::min(count, it->second);
  }
  return total;
}

} // namespace

long ngram_matches(const std::vector<std::string>& gloss_tokens,
                   const std::vector<std::string>& target_tokens, int k, bool stem_unigrams) {
  if (k < 1) throw UsageError("k must be >= 1");
  return clipped_overlap(gram_counts(gloss_tokens, k, stem_unigrams && k == 1),
                         gram_counts(target_tokens, k, stem_unigrams && k == 1));
}

MatchBreakdown similarity(const GlossTranslation& gloss, const Sentence& target,
                          const ScoreWeights& weights) {
  weights.validate();
  MatchBreakdown breakdown;
  breakdown.ngram_counts.reserve(weights.max_n);
  for (int k = 1; k <= weights.max_n; ++k)
    breakdown.ngram_counts.push_back(ngram_matches(gloss.tokens, target.tokens, k, k == 1));

  // number tokens matched by comma-stripped string, clipped
  std::map<std::string, long> gloss_numbers, target_numbers;
  auto number_key = [](const std::string& token) {
    std::string key;
    for (char c : token)
      if (c != ',') key += c;
    return key;
  };
  for (const auto& t : gloss.tokens)
    if (is_number_token(t)) ++gloss_numbers[number_key(t)];
  for (const auto& t : target.tokens)
    if (is_number_token(t)) ++target_numbers[number_key(t)];
  breakdown.number_matches = clipped_overlap(gloss_numbers, target_numbers);

  // proper-noun candidates on the target side, gloss matched case-insensitively
  std::map<std::string, long> target_propn, gloss_lower;
  for (std::size_t i = 0; i < target.tokens.size(); ++i)
    if (is_propn_candidate(target.tokens[i], static_cast<int>(i)))
      ++target_propn[lowercase_ascii(target.tokens[i])];
  for (const auto& t : gloss.tokens) ++gloss_lower[lowercase_ascii(t)];
  breakdown.propn_matches = clipped_overlap(target_propn, gloss_lower);

  breakdown.length_factor = static_cast<double>(
      std::max(gloss.tokens.size(), target.tokens.size()));

  double numerator = 0.0;
  for (int k = 0; k < weights.max_n; ++k)
    numerator += weights.alpha[k] * static_cast<double>(breakdown.ngram_counts[k]);
  numerator += weights.beta_number * static_cast<double>(breakdown.number_matches);
  numerator += weights.beta_propn * static_cast<double>(breakdown.propn_matches);
  breakdown.score = numerator / breakdown.length_factor;
  return breakdown;
}

} // namespace paramine
