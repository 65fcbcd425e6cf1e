#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "paramine/lexicon.hpp"

using namespace paramine;

namespace {

ParallelCorpus make_corpus(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& pairs) {
  ParallelCorpus corpus;
  for (const auto& [src, tgt] : pairs) {
    SentencePair p;
    p.src = src;
    p.tgt = tgt;
    corpus.pairs.push_back(std::move(p));
  }
  return corpus;
}

} // namespace

TEST_CASE("EM converges on the la-maison/la-fleur corpus") {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs = {
      {{"la", "maison"}, {"the", "house"}}, {{"la", "fleur"}, {"the", "flower"}}};

  // independent dense-table oracle confirms the convergence target first
  auto reference = oracle::em(pairs, 100);
  REQUIRE(reference.probs.at("la").at("the") >= 0.9);

  auto lex = estimate(make_corpus(pairs), BilingualDictionary{}, 100);
  CHECK(lex.probs.at("la").at("the") >= 0.9);
  CHECK(lex.probs.at("la").at("the") ==
        doctest::Approx(reference.probs.at("la").at("the")).epsilon(1e-6));
}

TEST_CASE("single pair concentrates after one iteration") {
  auto lex = estimate(make_corpus({{{"a"}, {"b"}}}), BilingualDictionary{}, 1);
  CHECK(lex.probs.at("a").at("b") == 1.0);
}

TEST_CASE("log-likelihood is non-decreasing") {
  auto lex = estimate(make_corpus({{{"la", "maison"}, {"the", "house"}},
                                   {{"la", "fleur"}, {"the", "flower"}},
                                   {{"maison", "bleue"}, {"blue", "house"}}}),
                      BilingualDictionary{}, 5);
  REQUIRE(lex.log_likelihoods.size() == 5);
  for (std::size_t i = 1; i < lex.log_likelihoods.size(); ++i)
    CHECK(lex.log_likelihoods[i] >= lex.log_likelihoods[i - 1] - 1e-9);
}

TEST_CASE("source distributions are normalized") {
  auto lex = estimate(make_corpus({{{"la", "maison"}, {"the", "house"}},
                                   {{"la", "fleur"}, {"the", "flower"}}}),
                      BilingualDictionary{}, 25);
  for (const auto& [f, row] : lex.probs) {
    double sum = 0.0;
    for (const auto& [e, p] : row) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      sum += p;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("empty corpus is rejected") {
  CHECK_THROWS_WITH_AS(estimate(ParallelCorpus{}, BilingualDictionary{}, 5),
                       "cannot estimate from empty corpus", DataError);
}

TEST_CASE("dictionary entries act as pseudo-observations") {
  BilingualDictionary dict;
  dict.entries["星"] = {"star"};
  auto lex = estimate(make_corpus({{{"a"}, {"b"}}}), dict, 3);
  CHECK(lex.probs.at("星").at("star") == 1.0);
}

TEST_CASE("determinism: identical runs give identical lexica") {
  auto corpus = make_corpus({{{"la", "maison"}, {"the", "house"}},
                             {{"la", "fleur"}, {"the", "flower"}}});
  auto a = estimate(corpus, BilingualDictionary{}, 10);
  auto b = estimate(corpus, BilingualDictionary{}, 10);
  CHECK(a.probs == b.probs);
  CHECK(a.log_likelihoods == b.log_likelihoods);
}

TEST_CASE("translate_token argmax, dictionary fallback and pass-through") {
  Lexicon lex;
  lex.probs["股市"] = {{"stocks", 0.7}, {"market", 0.3}};
  BilingualDictionary dict;
  dict.entries["猫"] = {"cat", "kitty"};

  CHECK(translate_token(lex, dict, "股市") == "stocks");
  CHECK(translate_token(lex, dict, "猫") == "cat");
  CHECK(translate_token(lex, dict, "14") == "14");

  // ties break to the lexicographically smaller target
  lex.probs["t"] = {{"beta", 0.5}, {"alpha", 0.5}};
  CHECK(translate_token(lex, dict, "t") == "alpha");
}

TEST_CASE("lexicon TSV save/load") {
  auto corpus = make_corpus({{{"la", "maison"}, {"the", "house"}},
                             {{"la", "fleur"}, {"the", "flower"}}});
  auto lex = estimate(corpus, BilingualDictionary{}, 10);
  auto path = std::filesystem::temp_directory_path() / "paramine_lexicon_test.tsv";
  save_lexicon(lex, path);

  std::ifstream in(path);
  std::string first_line;
  std::getline(in, first_line);
  CHECK(first_line.find('\t') != std::string::npos);

  auto loaded = load_lexicon(path);
  for (const auto& [f, row] : lex.probs)
    for (const auto& [e, p] : row)
      CHECK(loaded.probs.at(f).at(e) == doctest::Approx(p).epsilon(1e-6));
}
