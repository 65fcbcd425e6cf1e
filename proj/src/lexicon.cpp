#include "paramine/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace paramine {

namespace {

constexpr double kPruneThreshold = 1e-8;

std::vector<SentencePair> training_pairs(const ParallelCorpus& corpus,
                                         const BilingualDictionary& dictionary) {
  std::vector<SentencePair> pairs = corpus.pairs;
  for (const auto& [source, translations] : dictionary.entries) {
    SentencePair pseudo;
    pseudo.src = {source};
    pseudo.tgt = translations;
    pairs.push_back(std::move(pseudo));
  }
  return pairs;
}

} // namespace

Lexicon estimate(const ParallelCorpus& corpus, const BilingualDictionary& dictionary,
                 int em_iters) {
  if (corpus.pairs.empty()) throw DataError("cannot estimate from empty corpus");
  if (em_iters < 1) throw UsageError("em_iters must be >= 1");

  const std::vector<SentencePair> pairs = training_pairs(corpus, dictionary);

  Lexicon lex;
  lex.trained_on_hash = corpus.fingerprint();
  lex.trained_on_pairs = corpus.pairs.size();
  lex.em_iterations = em_iters;

  // uniform init over co-occurring vocabulary
  for (const auto& pair : pairs)
    for (const auto& f : pair.src)
      for (const auto& e : pair.tgt) lex.probs[f][e] = 0.0;
  for (auto& [f, row] : lex.probs) {
    double p = 1.0 / static_cast<double>(row.size());
    for (auto& [e, prob] : row) prob = p;
  }

  for (int iter = 0; iter < em_iters; ++iter) {
    std::map<std::string, std::map<std::string, double>> counts;
    double log_likelihood = 0.0;

    for (const auto& pair : pairs) {
      const double inv_len = 1.0 / static_cast<double>(pair.tgt.size());
      for (const auto& f : pair.src) {
        const auto& row = lex.probs.at(f);
        double denom = 0.0;
        for (const auto& e : pair.tgt) {
          auto it = row.find(e);
          if (it != row.end()) denom += it->second;
        }
        if (denom <= 0.0) continue; // all matching entries pruned away
        log_likelihood += std::log(denom * inv_len);
        auto& count_row = counts[f];
        for (const auto& e : pair.tgt) {
          auto it = row.find(e);
          if (it != row.end()) count_row[e] += it->second / denom;
        }
      }
    }
    lex.log_likelihoods.push_back(log_likelihood);

    // M-step with pruning of negligible entries
    for (auto& [f, row] : lex.probs) {
      const auto& count_row = counts[f];
      double total = 0.0;
      for (const auto& [e, c] : count_row) total += c;
      if (total <= 0.0) continue;
      std::map<std::string, double> updated;
      double kept = 0.0;
      for (const auto& [e, c] : count_row) {
        double p = c / total;
        if (p >= kPruneThreshold) {
          updated[e] = p;
          kept += p;
        }
      }
      for (auto& [e, p] : updated) p /= kept;
      row = std::move(updated);
    }
  }

  lex.final_log_likelihood = lex.log_likelihoods.back();
  return lex;
}

std::string translate_token(const Lexicon& lex, const BilingualDictionary& dictionary,
                            const std::string& token) {
  auto it = lex.probs.find(token);
  if (it != lex.probs.end() && !it->second.empty()) {
    const std::string* best = nullptr;
    double best_p = -1.0;
    // map order is lexicographic, so strict > keeps the smallest tied target
    for (const auto& [e, p] : it->second) {
      if (p > best_p) {
        best_p = p;
        best = &e;
      }
    }
    return *best;
  }
  const auto& translations = dictionary.lookup(token);
  if (!translations.empty()) return translations.front();
  return token;
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  char buf[32];
  for (const auto& [f, row] : lex.probs) {
    std::vector<std::pair<std::string, double>> entries(row.begin(), row.end());
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    for (const auto& [e, p] : entries) {
      std::snprintf(buf, sizeof(buf), "%.6f", p);
      out << f << '\t' << e << '\t' << buf << '\n';
    }
  }
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  Lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw DataError("line " + std::to_string(line_no) + ": expected 3 TSV fields");
    std::string f = line.substr(0, t1);
    std::string e = line.substr(t1 + 1, t2 - t1 - 1);
    lex.probs[f][e] = std::stod(line.substr(t2 + 1));
  }
  return lex;
}

} // namespace paramine
