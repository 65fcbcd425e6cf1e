#ifndef PARAMINE_DECODER_HPP
#define PARAMINE_DECODER_HPP

#include <string>
#include <vector>

#include "paramine/corpus.hpp"
#include "paramine/lexicon.hpp"

namespace paramine {

// Monotone word-for-word translation of a source sentence; the comparison
// key for similarity scoring.
struct GlossTranslation {
  Sentence source;
  std::vector<std::string> tokens; // one per source token, in source order
  // sum of ln(chosen probability); pass-through tokens contribute ln(0.5).
  // Diagnostic only, never used for selection.
  double model_score = 0.0;
};

GlossTranslation gloss(const Lexicon& lex, const BilingualDictionary& dictionary,
                       const Sentence& s);

} // namespace paramine

#endif
