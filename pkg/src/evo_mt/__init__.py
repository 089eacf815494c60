"""Sinhala to English machine translation with PPMI word-sense selection and
evolutionary SVO reordering."""

__version__ = "0.1.0"

from .chunker import ChunkGrammar, ChunkSequence, chunk, load_grammar, parse_grammar
from .disambiguator import SenseChoice, disambiguate_sentence, score_gloss
from .evolution import (Candidate, EaConfig, EvolutionReport, TerminatedBy, derive_target,
                        evolve, fitness, mutate)
from .kernels import BACKEND
from .lexicon import BilingualLexicon, GlossEntry, load_lexicon, lookup
from .pipeline import TranslationResult, translate_sentence, translate_text
from .ppmi import CooccurrenceModel, build_model, load_model, pmi, ppmi, save_model
from .tagger import TaggedToken, TagLexicon, load_taglex, tag_tokens
from .tokenizer import Token, TokenKind, split_sentences, tokenize

__all__ = [
    "BACKEND", "BilingualLexicon", "Candidate", "ChunkGrammar", "ChunkSequence",
    "CooccurrenceModel", "EaConfig", "EvolutionReport", "GlossEntry", "SenseChoice",
    "TagLexicon", "TaggedToken", "TerminatedBy", "Token", "TokenKind", "TranslationResult",
    "build_model", "chunk", "derive_target", "disambiguate_sentence", "evolve", "fitness",
    "load_grammar", "load_lexicon", "load_model", "load_taglex", "lookup", "mutate",
    "parse_grammar", "pmi", "ppmi", "save_model", "score_gloss", "split_sentences",
    "tag_tokens", "tokenize", "translate_sentence", "translate_text",
]
