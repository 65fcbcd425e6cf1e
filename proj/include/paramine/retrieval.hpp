#ifndef PARAMINE_RETRIEVAL_HPP
#define PARAMINE_RETRIEVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "paramine/corpus.hpp"

namespace paramine {

// In-memory inverted index over target documents, lowercased at index time.
struct InvertedIndex {
  std::map<std::string, std::vector<std::pair<std::string, int>>> postings;
  std::map<std::string, int> doc_lengths;
  int doc_count = 0;
};

InvertedIndex build_index(const ComparableCorpus& corpus);

// Dictionary-translate a source document into a bag of target tokens:
// every translation of every token, lowercased; number tokens pass through
// verbatim; tokens without an entry are dropped.
std::map<std::string, int> make_query(const std::vector<Sentence>& source_doc,
                                      const BilingualDictionary& dictionary);

// Top-k doc_ids by TF-IDF cosine (tf = raw count, idf = ln(N/df), both
// vectors L2-normalized). Zero-overlap documents omitted, ties broken by
// lexicographic doc_id.
std::vector<std::string> retrieve(const InvertedIndex& index,
                                  const std::map<std::string, int>& query, int k);

} // namespace paramine

#endif
