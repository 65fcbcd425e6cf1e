#include <doctest.h>

#include <cmath>

#include "paramine/retrieval.hpp"

using namespace paramine;

namespace {

ComparableCorpus corpus_with_targets(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& docs) {
  ComparableCorpus corpus;
  for (const auto& [id, tokens] : docs) {
    Document doc;
    doc.doc_id = id;
    doc.lang = Lang::Target;
    Sentence s;
    s.tokens = tokens;
    s.lang = Lang::Target;
    s.doc_id = id;
    doc.sentences.push_back(std::move(s));
    corpus.target_docs[id] = std::move(doc);
  }
  return corpus;
}

std::vector<Sentence> source_doc(const std::vector<std::string>& tokens) {
  Sentence s;
  s.tokens = tokens;
  s.lang = Lang::Source;
  return {s};
}

} // namespace

TEST_CASE("build_index counts frequencies and lengths") {
  auto index = build_index(corpus_with_targets({{"d", {"The", "cat"}}}));
  CHECK(index.doc_count == 1);
  CHECK(index.doc_lengths.at("d") == 2);
  REQUIRE(index.postings.at("the").size() == 1); // lowercased at index time
  CHECK(index.postings.at("the")[0] == std::pair<std::string, int>{"d", 1});
  CHECK(index.postings.at("cat")[0].second == 1);
}

TEST_CASE("build_index handles empty corpora and repeated tokens") {
  auto empty = build_index(ComparableCorpus{});
  CHECK(empty.doc_count == 0);
  CHECK(empty.postings.empty());

  auto index = build_index(corpus_with_targets({{"d", {"a", "a", "b"}}}));
  CHECK(index.postings.at("a")[0].second == 2);
  CHECK(index.doc_lengths.at("d") == 3);
}

TEST_CASE("make_query expands every dictionary translation") {
  BilingualDictionary dict;
  dict.entries["股市"] = {"stocks"};
  dict.entries["上扬"] = {"rise", "gain"};
  auto bag = make_query(source_doc({"股市", "上扬"}), dict);
  CHECK(bag == std::map<std::string, int>{{"stocks", 1}, {"rise", 1}, {"gain", 1}});
}

TEST_CASE("make_query passes numbers through and skips unknown tokens") {
  BilingualDictionary dict;
  CHECK(make_query(source_doc({"14"}), dict) == std::map<std::string, int>{{"14", 1}});
  CHECK(make_query(source_doc({"昨日"}), dict).empty());
}

TEST_CASE("retrieve returns only overlapping documents") {
  auto index = build_index(
      corpus_with_targets({{"A", {"stocks", "rise"}}, {"B", {"weather", "report"}}}));
  CHECK(retrieve(index, {{"stocks", 1}}, 20) == std::vector<std::string>{"A"});
  CHECK(retrieve(index, {}, 20).empty());
}

TEST_CASE("retrieve ranks by tf-idf cosine, verified against hand-computed scores") {
  // Engineered index: query term "q" appears with different tf and doc
  // lengths so the three docs get distinct cosine scores.
  auto index = build_index(corpus_with_targets({
      {"d1", {"q", "q", "q", "pad1"}},
      {"d2", {"q", "q", "pad2", "pad2"}},
      {"d3", {"q", "f1", "f2", "f3", "f4", "f5", "f6", "f7"}},
      {"d4", {"other", "content"}}, // keeps idf("q") positive
  }));
  std::map<std::string, int> query = {{"q", 1}};

  // oracle: cosine computed from first principles
  double n = 4.0;
  auto idf = [&](double df) { return std::log(n / df); };
  auto score = [&](std::vector<std::pair<std::string, int>> doc_tf, int q_tf) {
    double dot = 0.0, dnorm = 0.0;
    for (auto& [t, tf] : doc_tf) {
      double w = tf * idf(t == "q" ? 3.0 : 1.0);
      dnorm += w * w;
      if (t == "q") dot += (q_tf * idf(3.0)) * w;
    }
    double qnorm = q_tf * idf(3.0);
    return dot / (qnorm * std::sqrt(dnorm));
  };
  double s1 = score({{"q", 3}, {"pad1", 1}}, 1);
  double s2 = score({{"q", 2}, {"pad2", 2}}, 1);
  double s3 = score({{"q", 1}, {"f1", 1}, {"f2", 1}, {"f3", 1}, {"f4", 1}, {"f5", 1},
                     {"f6", 1}, {"f7", 1}},
                    1);
  REQUIRE(s1 > s2);
  REQUIRE(s2 > s3);

  CHECK(retrieve(index, query, 3) == std::vector<std::string>{"d1", "d2", "d3"});
  CHECK(retrieve(index, query, 2) == std::vector<std::string>{"d1", "d2"});
}

TEST_CASE("retrieve breaks score ties by doc_id and respects k") {
  auto index = build_index(corpus_with_targets(
      {{"b", {"x", "y"}}, {"a", {"x", "z"}}, {"c", {"w", "v"}}}));
  auto result = retrieve(index, {{"x", 1}}, 20);
  CHECK(result == std::vector<std::string>{"a", "b"});
  CHECK(retrieve(index, {{"x", 1}}, 1) == std::vector<std::string>{"a"});
}
