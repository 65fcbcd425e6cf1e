#include "paramine/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace paramine {

using nlohmann::json;
using nlohmann::ordered_json;

bool is_number_token(std::string_view token) {
  if (token.empty()) return false;
  bool has_digit = false;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      has_digit = true;
    } else if (c != '.' && c != ',' && c != '%' && c != '-') {
      return false;
    }
  }
  return has_digit;
}

bool is_propn_candidate(std::string_view token, int position_in_sentence) {
  if (position_in_sentence == 0 || token.empty()) return false;
  char c = token.front();
  return c >= 'A' && c <= 'Z';
}

std::uint64_t ParallelCorpus::fingerprint() const {
  std::uint64_t h = fnv1a(std::to_string(pairs.size()));
  for (const auto& p : pairs) {
    for (const auto& t : p.src) h = fnv1a(t, fnv1a("\x1f", h));
    h = fnv1a("\x1e", h);
    for (const auto& t : p.tgt) h = fnv1a(t, fnv1a("\x1f", h));
    h = fnv1a("\x1e", h);
  }
  return h;
}

const std::vector<std::string>& BilingualDictionary::lookup(const std::string& token) const {
  static const std::vector<std::string> empty;
  auto it = entries.find(token);
  return it == entries.end() ? empty : it->second;
}

namespace {

void check_tokens(const std::vector<std::string>& tokens, int line_no, const char* field) {
  if (tokens.empty())
    throw DataError("line " + std::to_string(line_no) + ": empty " + field + " token list");
  for (const auto& t : tokens) {
    if (t.empty())
      throw DataError("line " + std::to_string(line_no) + ": empty token in " + field);
    for (char c : t)
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
        throw DataError("line " + std::to_string(line_no) + ": token contains whitespace in " +
                        field);
  }
}

std::vector<std::string> tokens_from_json(const json& arr, int line_no, const char* field) {
  if (!arr.is_array())
    throw DataError("line " + std::to_string(line_no) + ": " + field + " is not an array");
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (const auto& t : arr) {
    if (!t.is_string())
      throw DataError("line " + std::to_string(line_no) + ": non-string token in " + field);
    out.push_back(t.get<std::string>());
  }
  check_tokens(out, line_no, field);
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

} // namespace

ParallelCorpus load_parallel(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  ParallelCorpus corpus;
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
    if (!obj.contains("src"))
      throw DataError("line " + std::to_string(line_no) + ": missing source");
    if (!obj.contains("tgt"))
      throw DataError("line " + std::to_string(line_no) + ": missing target");
    SentencePair pair;
    pair.src = tokens_from_json(obj["src"], line_no, "src");
    pair.tgt = tokens_from_json(obj["tgt"], line_no, "tgt");
    if (obj.contains("origin")) {
      const auto& origin = obj["origin"];
      if (origin.is_object() && origin.contains("mined"))
        pair.origin.mined_iteration = origin["mined"].get<int>();
    }
    corpus.pairs.push_back(std::move(pair));
  }
  return corpus;
}

void write_parallel(const ParallelCorpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto& pair : corpus.pairs) {
    ordered_json obj;
    obj["src"] = pair.src;
    obj["tgt"] = pair.tgt;
    if (!pair.origin.is_seed()) obj["origin"] = {{"mined", pair.origin.mined_iteration}};
    out << obj.dump() << '\n';
  }
}

ComparableCorpus load_comparable(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  ComparableCorpus corpus;
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
    Document doc;
    doc.doc_id = obj.at("doc_id").get<std::string>();
    std::string lang = obj.at("lang").get<std::string>();
    if (lang == "src") {
      doc.lang = Lang::Source;
    } else if (lang == "tgt") {
      doc.lang = Lang::Target;
    } else {
      throw DataError("line " + std::to_string(line_no) + ": unknown lang '" + lang + "'");
    }
    auto& docs = doc.lang == Lang::Source ? corpus.source_docs : corpus.target_docs;
    if (docs.count(doc.doc_id)) throw DataError("duplicate doc_id " + doc.doc_id);
    int index = 0;
    for (const auto& sent : obj.at("sentences")) {
      Sentence s;
      s.tokens = tokens_from_json(sent, line_no, "sentences");
      s.lang = doc.lang;
      s.doc_id = doc.doc_id;
      s.index = index++;
      doc.sentences.push_back(std::move(s));
    }
    if (obj.contains("links")) {
      if (doc.lang != Lang::Source)
        throw DataError("line " + std::to_string(line_no) + ": links on a target doc");
      corpus.links[doc.doc_id] = obj["links"].get<std::vector<std::string>>();
    }
    docs[doc.doc_id] = std::move(doc);
  }
  for (const auto& [src_id, targets] : corpus.links) {
    if (!corpus.source_docs.count(src_id))
      throw DataError("link from unknown doc_id " + src_id);
    for (const auto& tgt_id : targets)
      if (!corpus.target_docs.count(tgt_id))
        throw DataError("link to unknown doc_id " + tgt_id);
  }
  return corpus;
}

BilingualDictionary load_dictionary(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  BilingualDictionary dict;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError("line " + std::to_string(line_no) + ": no TAB separator");
    std::string source = line.substr(0, tab);
    auto& translations = dict.entries[source];
    std::size_t pos = tab + 1;
    while (pos <= line.size()) {
      std::size_t next = line.find('\t', pos);
      std::string t = next == std::string::npos ? line.substr(pos) : line.substr(pos, next - pos);
      if (!t.empty()) translations.push_back(std::move(t));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (translations.empty())
      throw DataError("line " + std::to_string(line_no) + ": no translations for " + source);
  }
  return dict;
}

} // namespace paramine
