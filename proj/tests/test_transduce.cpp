#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "paramine/transduce.hpp"
#include "synthetic.hpp"

using namespace paramine;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("paramine_transduce_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("config loading resolves paths and reads all keys") {
  auto dir = fresh_dir("config");
  synthetic::write_lines(dir / "seed.jsonl", {"{\"src\":[\"a\"],\"tgt\":[\"b\"]}"});
  synthetic::write_lines(dir / "comparable.jsonl", {});
  synthetic::write_lines(
      dir / "config.json",
      {"{\"iterations\": 3, \"nbest\": 2, \"top_k_docs\": 7, \"em_iters\": 4,"
       " \"alpha\": [1, 2, 3], \"beta_number\": 1.5, \"beta_propn\": 2.5,"
       " \"thresholds\": [[5, 4.0], [null, 2.0]], \"allow_shared_targets\": true,"
       " \"seed\": \"seed.jsonl\", \"comparable\": \"comparable.jsonl\"}"});
  auto config = load_config(dir / "config.json");
  CHECK(config.iterations == 3);
  CHECK(config.nbest == 2);
  CHECK(config.top_k_docs == 7);
  CHECK(config.em_iters == 4);
  CHECK(config.weights.max_n == 3);
  CHECK(config.weights.beta_number == 1.5);
  CHECK(config.allow_shared_targets);
  CHECK(config.thresholds.threshold_for(5) == 4.0);
  CHECK(config.thresholds.threshold_for(50) == 2.0);
  CHECK(config.seed == dir / "seed.jsonl");
}

TEST_CASE("R=0 yields exactly the baseline report") {
  auto dir = fresh_dir("r0");
  auto planted = synthetic::build_planted(dir / "data", 0);
  auto config = load_config(planted.config);
  auto reports = run_loop(config, dir / "out");
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].iteration == 0);
  CHECK(reports[0].corpus_size == planted.seed_size);
  CHECK(reports[0].mined_count == 0);
}

TEST_CASE("empty comparable corpus mines nothing at every iteration") {
  auto dir = fresh_dir("emptyu");
  synthetic::write_lines(dir / "seed.jsonl", {"{\"src\":[\"a\"],\"tgt\":[\"b\"]}"});
  synthetic::write_lines(dir / "comparable.jsonl", {});
  synthetic::write_lines(dir / "config.json",
                         {"{\"iterations\": 2, \"seed\": \"seed.jsonl\","
                          " \"comparable\": \"comparable.jsonl\"}"});
  auto reports = run_loop(load_config(dir / "config.json"), dir / "out");
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    CHECK(r.mined_count == 0);
    CHECK(r.corpus_size == 1);
  }
}

TEST_CASE("planted pairs are recovered and distractors rejected") {
  auto dir = fresh_dir("planted");
  auto planted = synthetic::build_planted(dir / "data", 2);
  auto config = load_config(planted.config);
  auto reports = run_loop(config, dir / "out");
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].corpus_size == 100);
  CHECK(reports[1].corpus_size == 100 + reports[1].mined_count);
  CHECK(reports[2].corpus_size == 100 + reports[2].mined_count);

  auto mined = load_parallel(dir / "out" / "mined.jsonl"); // T_2
  CHECK(mined.size() == planted.planted.size());
  std::set<std::string> mined_keys;
  for (const auto& pair : mined.pairs) {
    std::string key;
    for (const auto& t : pair.src) key += t + " ";
    mined_keys.insert(key);
    CHECK(pair.origin.mined_iteration == 2);
  }
  for (const auto& [src, tgt] : planted.planted) {
    std::string key;
    for (const auto& t : src) key += t + " ";
    CHECK(mined_keys.count(key) == 1);
  }
}

TEST_CASE("retraining can demote a borderline pair (replacement semantics)") {
  auto dir = fresh_dir("demotion");
  auto config_path = synthetic::build_demotion(dir / "data");
  auto reports = run_loop(load_config(config_path), dir / "out");
  REQUIRE(reports.size() == 3);
  CHECK(reports[1].mined_count == 6); // |T_0|: five teachers + the borderline pair
  CHECK(reports[2].mined_count == 5); // |T_1|: the borderline pair fell below threshold
  CHECK(reports[2].mined_count < reports[1].mined_count);
}

TEST_CASE("two identical runs produce byte-identical outputs") {
  auto dir = fresh_dir("determinism");
  auto planted = synthetic::build_planted(dir / "data", 1);
  auto config = load_config(planted.config);
  run_loop(config, dir / "out1");
  run_loop(config, dir / "out2");
  CHECK(slurp(dir / "out1" / "report.tsv") == slurp(dir / "out2" / "report.tsv"));
  CHECK(slurp(dir / "out1" / "mined.jsonl") == slurp(dir / "out2" / "mined.jsonl"));
  CHECK(slurp(dir / "out1" / "lexicon.tsv") == slurp(dir / "out2" / "lexicon.tsv"));
}

TEST_CASE("checkpoint interrupt and resume is byte-identical to an uninterrupted run") {
  auto dir = fresh_dir("resume");
  auto planted = synthetic::build_planted(dir / "data", 2);
  auto config = load_config(planted.config);

  run_loop(config, dir / "full");
  run_loop(config, dir / "split", false, 1); // stop after iteration 1
  auto resumed = run_loop(config, dir / "split", true);

  CHECK(slurp(dir / "full" / "report.tsv") == slurp(dir / "split" / "report.tsv"));
  CHECK(slurp(dir / "full" / "mined.jsonl") == slurp(dir / "split" / "mined.jsonl"));
  REQUIRE(resumed.size() == 3);
}

TEST_CASE("resume refuses missing or mismatching checkpoints") {
  auto dir = fresh_dir("badresume");
  auto planted = synthetic::build_planted(dir / "data", 1);
  auto config = load_config(planted.config);
  CHECK_THROWS_AS(run_loop(config, dir / "nothing", true), DataError);

  run_loop(config, dir / "out", false, 0);
  auto modified = config;
  modified.config_fingerprint ^= 1; // as if the config file changed
  CHECK_THROWS_WITH_AS(run_loop(modified, dir / "out", true),
                       "config changed since checkpoint", DataError);
}

TEST_CASE("report TSV layout and rendering") {
  auto dir = fresh_dir("report");
  std::vector<IterationReport> reports;
  IterationReport r0;
  r0.iteration = 0;
  r0.corpus_size = 1000;
  r0.per_test_set = {{"nist2008", 4.1758, 0.0663}, {"cwmt2008", 4.3050, 0.0624}};
  IterationReport r1;
  r1.iteration = 1;
  r1.corpus_size = 1175;
  r1.mined_count = 175;
  r1.per_test_set = {{"nist2008", 4.1439, 0.0667}, {"cwmt2008", 4.3111, 0.0591}};
  reports = {r0, r1};
  write_reports(reports, dir / "report.tsv");

  auto tsv = slurp(dir / "report.tsv");
  CHECK(tsv ==
        "iteration\tcorpus_size\tnist2008_nist\tnist2008_bleu\tcwmt2008_nist\tcwmt2008_bleu\n"
        "0\t1000\t4.1758\t6.63\t4.3050\t6.24\n"
        "1\t1175\t4.1439\t6.67\t4.3111\t5.91\n");

  auto rendered = render_report(dir / "report.tsv");
  auto golden = slurp(fs::path(PARAMINE_TEST_DATA_DIR) / "report_golden.txt");
  CHECK(rendered == golden);
}
