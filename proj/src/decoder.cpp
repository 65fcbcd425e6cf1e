#include "paramine/decoder.hpp"

#include <cmath>

namespace paramine {

GlossTranslation gloss(const Lexicon& lex, const BilingualDictionary& dictionary,
                       const Sentence& s) {
  GlossTranslation out;
  out.source = s;
  out.tokens.reserve(s.tokens.size());
  for (const auto& token : s.tokens) {
    double p = 0.5; // pass-through surrogate
    auto it = lex.probs.find(token);
    if (it != lex.probs.end() && !it->second.empty()) {
      double best_p = -1.0;
      const std::string* best = nullptr;
      for (const auto& [e, prob] : it->second) {
        if (prob > best_p) {
          best_p = prob;
          best = &e;
        }
      }
      out.tokens.push_back(*best);
      p = best_p;
    } else {
      const auto& translations = dictionary.lookup(token);
      out.tokens.push_back(translations.empty() ? token : translations.front());
    }
    out.model_score += std::log(p);
  }
  return out;
}

} // namespace paramine
