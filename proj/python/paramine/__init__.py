"""Parallel sentence mining from comparable bilingual corpora."""

from paramine._core import (  # noqa: F401
    BilingualDictionary,
    ComparableCorpus,
    DataError,
    GlossTranslation,
    IterationReport,
    Lexicon,
    LoopConfig,
    MatchBreakdown,
    ParallelCorpus,
    ScoreWeights,
    Sentence,
    SentencePair,
    UsageError,
    bleu,
    estimate,
    gloss,
    load_comparable,
    load_config,
    load_dictionary,
    load_lexicon,
    load_parallel,
    ngram_matches,
    nist,
    run_loop,
    save_lexicon,
    similarity,
    stem,
    translate_token,
    write_parallel,
)
