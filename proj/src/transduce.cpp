#include "paramine/transduce.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "paramine/decoder.hpp"

namespace paramine {

using nlohmann::json;

void LoopConfig::validate() const {
  if (iterations < 0) throw UsageError("iterations must be >= 0");
  if (nbest < 1) throw UsageError("nbest must be >= 1");
  if (top_k_docs < 1) throw UsageError("top_k_docs must be >= 1");
  if (em_iters < 1) throw UsageError("em_iters must be >= 1");
  weights.validate();
  thresholds.validate();
}

LoopConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  json obj;
  try {
    obj = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }

  LoopConfig config;
  config.config_fingerprint = fnv1a(obj.dump());

  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  if (obj.contains("iterations")) config.iterations = obj["iterations"].get<int>();
  if (obj.contains("nbest")) config.nbest = obj["nbest"].get<int>();
  if (obj.contains("top_k_docs")) config.top_k_docs = obj["top_k_docs"].get<int>();
  if (obj.contains("em_iters")) config.em_iters = obj["em_iters"].get<int>();
  if (obj.contains("alpha")) {
    config.weights.alpha = obj["alpha"].get<std::vector<double>>();
    config.weights.max_n = static_cast<int>(config.weights.alpha.size());
  }
  if (obj.contains("beta_number")) config.weights.beta_number = obj["beta_number"].get<double>();
  if (obj.contains("beta_propn")) config.weights.beta_propn = obj["beta_propn"].get<double>();
  if (obj.contains("thresholds")) {
    config.thresholds.buckets.clear();
    for (const auto& entry : obj["thresholds"]) {
      ThresholdTable::Bucket bucket;
      bucket.max_target_length = entry.at(0).is_null() ? std::numeric_limits<int>::max()
                                                       : entry.at(0).get<int>();
      bucket.threshold = entry.at(1).get<double>();
      config.thresholds.buckets.push_back(bucket);
    }
  }
  if (obj.contains("allow_shared_targets"))
    config.allow_shared_targets = obj["allow_shared_targets"].get<bool>();
  if (obj.contains("seed")) config.seed = resolve(obj["seed"].get<std::string>());
  if (obj.contains("comparable")) config.comparable = resolve(obj["comparable"].get<std::string>());
  if (obj.contains("dictionary")) config.dictionary = resolve(obj["dictionary"].get<std::string>());
  if (obj.contains("test_sets"))
    for (const auto& [name, p] : obj["test_sets"].items())
      config.test_sets[name] = resolve(p.get<std::string>());

  config.validate();
  return config;
}

SentencePair to_sentence_pair(const CandidatePair& c, int iteration) {
  SentencePair pair;
  pair.src = c.source.tokens;
  pair.tgt = c.target.tokens;
  pair.origin.mined_iteration = iteration;
  return pair;
}

namespace {

std::vector<CandidatePair> label_doc(const Lexicon& lex, const BilingualDictionary& dictionary,
                                     const ComparableCorpus& comparable,
                                     const InvertedIndex& index, const LoopConfig& config,
                                     const Document& source_doc) {
  // candidate target docs: known links when present, retrieval otherwise
  std::vector<std::string> target_ids;
  auto link_it = comparable.links.find(source_doc.doc_id);
  if (link_it != comparable.links.end()) {
    target_ids = link_it->second;
  } else {
    target_ids = retrieve(index, make_query(source_doc.sentences, dictionary),
                          config.top_k_docs);
  }

  std::vector<const Sentence*> targets;
  for (const auto& id : target_ids)
    for (const auto& sentence : comparable.target_docs.at(id).sentences)
      targets.push_back(&sentence);

  std::vector<CandidatePair> result;
  for (const auto& source : source_doc.sentences) {
    GlossTranslation g = gloss(lex, dictionary, source);
    std::vector<CandidatePair> per_source;
    per_source.reserve(targets.size());
    for (const Sentence* target : targets) {
      CandidatePair c;
      c.source = source;
      c.gloss = g;
      c.target = *target;
      c.breakdown = similarity(g, *target, config.weights);
      per_source.push_back(std::move(c));
    }
    auto best = top_n(std::move(per_source), config.nbest);
    result.insert(result.end(), best.begin(), best.end());
  }
  return result;
}

} // namespace

MinePassResult mine_pass(const Lexicon& lex, const BilingualDictionary& dictionary,
                         const ComparableCorpus& comparable, const InvertedIndex& index,
                         const LoopConfig& config) {
  std::vector<const Document*> docs;
  for (const auto& [id, doc] : comparable.source_docs) docs.push_back(&doc);

  unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(docs.size(), 1));

  MinePassResult result;
  if (jobs <= 1 || docs.size() <= 1) {
    for (const Document* doc : docs) {
      auto part = label_doc(lex, dictionary, comparable, index, config, *doc);
      result.candidates.insert(result.candidates.end(), part.begin(), part.end());
    }
  } else {
    // contiguous chunks merged in doc order keep the output deterministic
    std::vector<std::future<std::vector<CandidatePair>>> futures;
    std::size_t chunk = (docs.size() + jobs - 1) / jobs;
    for (std::size_t start = 0; start < docs.size(); start += chunk) {
      std::size_t end = std::min(start + chunk, docs.size());
      futures.push_back(std::async(std::launch::async, [&, start, end] {
        std::vector<CandidatePair> part;
        for (std::size_t i = start; i < end; ++i) {
          auto doc_part = label_doc(lex, dictionary, comparable, index, config, *docs[i]);
          part.insert(part.end(), doc_part.begin(), doc_part.end());
        }
        return part;
      }));
    }
    for (auto& f : futures) {
      auto part = f.get();
      result.candidates.insert(result.candidates.end(), part.begin(), part.end());
    }
  }

  result.selected = select(result.candidates, config.thresholds, config.allow_shared_targets);
  return result;
}

namespace {

IterationReport::Eval evaluate(const Lexicon& lex, const BilingualDictionary& dictionary,
                               const TestSet& ts) {
  std::vector<TokenList> hyps;
  std::vector<std::vector<TokenList>> refs;
  hyps.reserve(ts.segments.size());
  for (const auto& seg : ts.segments) {
    Sentence s;
    s.tokens = seg.src;
    s.lang = Lang::Source;
    hyps.push_back(gloss(lex, dictionary, s).tokens);
    refs.push_back(seg.refs);
  }
  IterationReport::Eval eval;
  eval.name = ts.name;
  eval.nist = nist(hyps, refs);
  eval.bleu = bleu(hyps, refs);
  return eval;
}

json report_to_json(const IterationReport& r) {
  json sets = json::array();
  for (const auto& e : r.per_test_set)
    sets.push_back({{"name", e.name}, {"nist", e.nist}, {"bleu", e.bleu}});
  return {{"iteration", r.iteration},
          {"corpus_size", r.corpus_size},
          {"mined_count", r.mined_count},
          {"per_test_set", sets}};
}

IterationReport report_from_json(const json& obj) {
  IterationReport r;
  r.iteration = obj.at("iteration").get<int>();
  r.corpus_size = obj.at("corpus_size").get<std::size_t>();
  r.mined_count = obj.at("mined_count").get<std::size_t>();
  for (const auto& e : obj.at("per_test_set")) {
    IterationReport::Eval eval;
    eval.name = e.at("name").get<std::string>();
    eval.nist = e.at("nist").get<double>();
    eval.bleu = e.at("bleu").get<double>();
    r.per_test_set.push_back(std::move(eval));
  }
  return r;
}

std::string format_double(const char* fmt, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

} // namespace

std::string report_header(const std::vector<IterationReport>& reports) {
  std::string header = "iteration\tcorpus_size";
  if (!reports.empty()) {
    for (const auto& e : reports.front().per_test_set)
      header += "\t" + e.name + "_nist\t" + e.name + "_bleu";
  }
  return header;
}

std::string format_report_row(const IterationReport& report) {
  std::string row = std::to_string(report.iteration) + "\t" + std::to_string(report.corpus_size);
  for (const auto& e : report.per_test_set) {
    row += "\t" + format_double("%.4f", e.nist);
    row += "\t" + format_double("%.2f", e.bleu * 100.0);
  }
  return row;
}

void write_reports(const std::vector<IterationReport>& reports,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << report_header(reports) << '\n';
  for (const auto& r : reports) out << format_report_row(r) << '\n';
}

std::vector<IterationReport> run_loop(const LoopConfig& config,
                                      const std::filesystem::path& out_dir, bool resume,
                                      int stop_after) {
  config.validate();

  ParallelCorpus seed = load_parallel(config.seed);
  ComparableCorpus comparable = load_comparable(config.comparable);
  BilingualDictionary dictionary;
  if (!config.dictionary.empty()) dictionary = load_dictionary(config.dictionary);
  std::vector<TestSet> test_sets;
  for (const auto& [name, path] : config.test_sets)
    test_sets.push_back(load_test_set(path, name));
  InvertedIndex index = build_index(comparable);

  std::filesystem::create_directories(out_dir);
  const auto state_path = out_dir / "state.json";
  const auto mined_path = out_dir / "mined.jsonl";
  const auto lexicon_path = out_dir / "lexicon.tsv";
  const auto report_path = out_dir / "report.tsv";

  std::vector<IterationReport> reports;
  std::vector<SentencePair> mined_prev; // T_{i-1}
  int start_iteration = 0;

  if (resume) {
    std::ifstream state_in(state_path);
    if (!state_in) throw DataError("no checkpoint state in " + out_dir.string());
    json state = json::parse(state_in);
    if (state.at("fingerprint").get<std::string>() !=
        std::to_string(config.config_fingerprint))
      throw DataError("config changed since checkpoint");
    start_iteration = state.at("next_iteration").get<int>();
    for (const auto& r : state.at("reports")) reports.push_back(report_from_json(r));
    mined_prev = load_parallel(mined_path).pairs;
  }

  for (int i = start_iteration; i <= config.iterations; ++i) {
    ParallelCorpus training = seed;
    training.pairs.insert(training.pairs.end(), mined_prev.begin(), mined_prev.end());

    Lexicon lex = estimate(training, dictionary, config.em_iters);

    IterationReport report;
    report.iteration = i;
    report.mined_count = mined_prev.size();
    report.corpus_size = seed.size() + mined_prev.size();
    for (const auto& ts : test_sets) report.per_test_set.push_back(evaluate(lex, dictionary, ts));
    reports.push_back(report);
    write_reports(reports, report_path);

    MinePassResult pass = mine_pass(lex, dictionary, comparable, index, config);
    ParallelCorpus mined;
    for (const auto& c : pass.selected) mined.pairs.push_back(to_sentence_pair(c, i));
    write_parallel(mined, out_dir / ("mined_iter_" + std::to_string(i) + ".jsonl"));

    // checkpoint after the iteration completes
    mined_prev = mined.pairs;
    save_lexicon(lex, lexicon_path);
    write_parallel(mined, mined_path);
    json state = {{"next_iteration", i + 1},
                  {"fingerprint", std::to_string(config.config_fingerprint)},
                  {"reports", json::array()}};
    for (const auto& r : reports) state["reports"].push_back(report_to_json(r));
    std::ofstream state_out(state_path);
    state_out << state.dump(2) << '\n';

    if (stop_after >= 0 && i >= stop_after) break;
  }
  return reports;
}

std::string render_report(const std::filesystem::path& tsv_path) {
  std::ifstream in(tsv_path);
  if (!in) throw DataError("cannot open " + tsv_path.string());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      std::size_t tab = line.find('\t', pos);
      cells.push_back(tab == std::string::npos ? line.substr(pos)
                                               : line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw DataError("empty report " + tsv_path.string());

  // test set names from header columns "<name>_nist"/"<name>_bleu"
  std::vector<std::string> set_names;
  const auto& header = rows.front();
  for (std::size_t c = 2; c + 1 < header.size() + 1 && c < header.size(); c += 2) {
    std::string name = header[c];
    if (name.size() > 5 && name.compare(name.size() - 5, 5, "_nist") == 0)
      name = name.substr(0, name.size() - 5);
    set_names.push_back(name);
  }

  // body cells: iteration label, corpus size, metric values
  std::vector<std::vector<std::string>> body;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::vector<std::string> cells = rows[r];
    if (cells[0] == "0") cells[0] = "0 (baseline)";
    body.push_back(std::move(cells));
  }

  std::size_t ncols = header.size();
  std::vector<std::size_t> width(ncols, 0);
  auto grow = [&](std::size_t c, std::size_t len) { width[c] = std::max(width[c], len); };
  grow(0, std::string("Iteration").size());
  grow(1, std::string("parallel corpus size").size());
  for (std::size_t c = 2; c < ncols; ++c) grow(c, 4); // NIST / BLEU
  for (const auto& cells : body)
    for (std::size_t c = 0; c < cells.size(); ++c) grow(c, cells[c].size());
  // group header (the set name) must fit across its two metric columns
  for (std::size_t s = 0; s < set_names.size(); ++s) {
    std::size_t c = 2 + 2 * s;
    if (c + 1 < ncols && set_names[s].size() > width[c] + 2 + width[c + 1])
      width[c + 1] = set_names[s].size() - width[c] - 2;
  }

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };

  std::ostringstream out;
  std::string line1 = pad("Iteration", width[0]) + "  " + pad("parallel corpus size", width[1]);
  std::string line2 = std::string(width[0], ' ') + "  " + std::string(width[1], ' ');
  for (std::size_t s = 0; s < set_names.size(); ++s) {
    std::size_t c = 2 + 2 * s;
    std::size_t span = width[c] + 2 + (c + 1 < ncols ? width[c + 1] : 0);
    line1 += "  " + pad(set_names[s], span);
    line2 += "  " + pad("NIST", width[c]) + "  " + pad("BLEU", c + 1 < ncols ? width[c + 1] : 4);
  }
  out << rstrip(line1) << '\n' << rstrip(line2) << '\n';
  for (const auto& cells : body) {
    std::string row;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) row += "  ";
      row += pad(cells[c], width[c]);
    }
    out << rstrip(row) << '\n';
  }
  return out.str();
}

} // namespace paramine
