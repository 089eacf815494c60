"""End-to-end Sinhala to English translation of sentences and paragraphs."""
from __future__ import annotations

from collections.abc import Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .chunker import ChunkGrammar
from .disambiguator import SenseChoice, disambiguate_sentence
from .errors import NoVerbFound
from .evolution import EaConfig, EvolutionReport, derive_target, evolve
from .lexicon import BilingualLexicon, Passthrough
from .ppmi import CooccurrenceModel
from .tagger import TaggedToken, tag_tokens
from .tokenizer import Token, split_sentences, tokenize


@dataclass(frozen=True)
class TranslationResult:
    source_tokens: tuple[Token, ...] = ()
    glossed: tuple[SenseChoice | Passthrough, ...] = ()
    direct: tuple[TaggedToken, ...] = ()
    final: tuple[TaggedToken, ...] = ()
    report: EvolutionReport | None = None
    rendered: str = ""

    def to_dict(self) -> dict:
        glossed = []
        for item in self.glossed:
            if isinstance(item, SenseChoice):
                glossed.append({
                    "source": item.source.text,
                    "gloss": item.chosen.gloss,
                    "pos": item.chosen.pos,
                    "score": item.score,
                    "alternatives": [[e.gloss, e.pos, s] for e, s in item.alternatives],
                })
            else:
                glossed.append({"source": item.token.text, "passthrough": True})
        return {
            "source_tokens": [{"text": t.text, "kind": t.kind.value} for t in self.source_tokens],
            "glossed": glossed,
            "direct": [str(t) for t in self.direct],
            "final": [str(t) for t in self.final],
            "report": self.report.to_dict() if self.report else None,
            "rendered": self.rendered,
        }


def render_tagged(tokens) -> str:
    """Token texts joined by single spaces; signs are spaced like words."""
    return " ".join(t.text for t in tokens)


def translate_sentence(lex: BilingualLexicon, model: CooccurrenceModel, taglex: Mapping[str, str],
                       grammar: ChunkGrammar, config: EaConfig, sentence: str) -> TranslationResult:
    tokens = tokenize(sentence)
    if not tokens:
        return TranslationResult()

    resolved = disambiguate_sentence(model, lex, tokens)
    glossed = tuple(choice for _, choice in resolved)
    pairs = []
    for choice in glossed:
        if isinstance(choice, SenseChoice):
            pairs.append((choice.chosen.gloss, choice.chosen.pos))
        else:
            pairs.append((choice.token.text, None))
    direct = tuple(tag_tokens(taglex, pairs))

    try:
        target = derive_target(direct, grammar, config.anchor_trailing_sign)
    except NoVerbFound:
        report = None
        final = direct
    else:
        report = evolve(direct, target, config)
        final = tuple(direct[k] for k in report.best.order)

    return TranslationResult(
        source_tokens=tuple(tokens),
        glossed=glossed,
        direct=direct,
        final=final,
        report=report,
        rendered=render_tagged(final),
    )


def translate_text(lex, model, taglex, grammar, config: EaConfig, text: str,
                   jobs: int = 1) -> list[TranslationResult]:
    """Translate every sentence of ``text``; results keep input order for any ``jobs``."""
    sentences = split_sentences(text)

    def one(sentence):
        return translate_sentence(lex, model, taglex, grammar, config, sentence)

    if jobs <= 1 or len(sentences) <= 1:
        return [one(s) for s in sentences]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, sentences))
