#ifndef PARAMINE_CORPUS_HPP
#define PARAMINE_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "paramine/util.hpp"

namespace paramine {

enum class Lang { Source, Target };

// Token classifiers shared by retrieval, scoring and query construction.
// A NUMBER token is non-empty, drawn from [0-9.,%-] and contains at least
// one digit ("14", "1,100", "10%").
bool is_number_token(std::string_view token);

// A target-side token is a proper-noun candidate when it starts with an
// uppercase ASCII letter and is not sentence-initial.
bool is_propn_candidate(std::string_view token, int position_in_sentence);

struct Sentence {
  std::vector<std::string> tokens;
  Lang lang = Lang::Source;
  std::string doc_id;
  int index = 0; // 0-based position within the document
};

// Sentence identity within a loaded collection.
inline std::string sentence_id(const Sentence& s) {
  return s.doc_id + ":" + std::to_string(s.index);
}

struct Origin {
  // negative = seed, otherwise the mining iteration that produced the pair
  int mined_iteration = -1;
  bool is_seed() const { return mined_iteration < 0; }
};

struct SentencePair {
  std::vector<std::string> src;
  std::vector<std::string> tgt;
  Origin origin;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;
  std::size_t size() const { return pairs.size(); }
  // Pair count + content hash, used for lexicon provenance and checkpoints.
  std::uint64_t fingerprint() const;
};

struct Document {
  std::string doc_id;
  Lang lang = Lang::Source;
  std::vector<Sentence> sentences;
};

struct ComparableCorpus {
  std::map<std::string, Document> source_docs;
  std::map<std::string, Document> target_docs;
  // source doc_id -> known topically-linked target doc_ids (optional)
  std::map<std::string, std::vector<std::string>> links;
};

struct BilingualDictionary {
  std::map<std::string, std::vector<std::string>> entries;

  // Total: unknown tokens yield the empty list.
  const std::vector<std::string>& lookup(const std::string& token) const;
};

ParallelCorpus load_parallel(const std::filesystem::path& path);
void write_parallel(const ParallelCorpus& corpus, const std::filesystem::path& path);

ComparableCorpus load_comparable(const std::filesystem::path& path);

BilingualDictionary load_dictionary(const std::filesystem::path& path);

} // namespace paramine

#endif
