#include "paramine/retrieval.hpp"

#include <algorithm>
#include <cmath>

namespace paramine {

InvertedIndex build_index(const ComparableCorpus& corpus) {
  InvertedIndex index;
  for (const auto& [doc_id, doc] : corpus.target_docs) {
    std::map<std::string, int> tf;
    int length = 0;
    for (const auto& sentence : doc.sentences) {
      for (const auto& token : sentence.tokens) {
        ++tf[lowercase_ascii(token)];
        ++length;
      }
    }
    for (const auto& [term, count] : tf) index.postings[term].emplace_back(doc_id, count);
    index.doc_lengths[doc_id] = length;
  }
  index.doc_count = static_cast<int>(index.doc_lengths.size());
  return index;
}

std::map<std::string, int> make_query(const std::vector<Sentence>& source_doc,
                                      const BilingualDictionary& dictionary) {
  std::map<std::string, int> bag;
  for (const auto& sentence : source_doc) {
    for (const auto& token : sentence.tokens) {
      if (is_number_token(token)) {
        ++bag[token];
        continue;
      }
      for (const auto& translation : dictionary.lookup(token))
        ++bag[lowercase_ascii(translation)];
    }
  }
  return bag;
}

std::vector<std::string> retrieve(const InvertedIndex& index,
                                  const std::map<std::string, int>& query, int k) {
  if (k < 1) throw UsageError("k must be >= 1");
  if (index.doc_count == 0 || query.empty()) return {};

  auto idf = [&](std::size_t df) {
    return std::log(static_cast<double>(index.doc_count) / static_cast<double>(df));
  };

  // document norms over the full tf-idf vectors
  std::map<std::string, double> doc_norm_sq;
  for (const auto& [term, postings] : index.postings) {
    double w = idf(postings.size());
    for (const auto& [doc_id, tf] : postings) doc_norm_sq[doc_id] += (tf * w) * (tf * w);
  }

  double query_norm_sq = 0.0;
  std::map<std::string, double> dots;
  for (const auto& [term, qtf] : query) {
    auto it = index.postings.find(term);
    if (it == index.postings.end()) continue;
    double w = idf(it->second.size());
    double qw = qtf * w;
    query_norm_sq += qw * qw;
    for (const auto& [doc_id, tf] : it->second) dots[doc_id] += qw * tf * w;
  }
  if (query_norm_sq <= 0.0) return {};
  double query_norm = std::sqrt(query_norm_sq);

  std::vector<std::pair<double, std::string>> scored;
  for (const auto& [doc_id, dot] : dots) {
    if (dot <= 0.0) continue;
    scored.emplace_back(dot / (query_norm * std::sqrt(doc_norm_sq[doc_id])), doc_id);
  }
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (static_cast<int>(scored.size()) > k) scored.resize(k);

  std::vector<std::string> result;
  result.reserve(scored.size());
  for (const auto& [score, doc_id] : scored) result.push_back(doc_id);
  return result;
}

} // namespace paramine
