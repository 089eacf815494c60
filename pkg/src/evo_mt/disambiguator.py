"""Gloss selection for ambiguous source words by PPMI association.

Words are resolved left to right. Positions already resolved contribute their
chosen gloss, positions still ahead contribute every candidate gloss, and a
position's contribution is its best PPMI with the gloss being scored.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .lexicon import BilingualLexicon, GlossEntry, Glosses, LookupResult, Passthrough, lookup
from .errors import UnknownWord
from .ppmi import CooccurrenceModel, ppmi
from .tokenizer import Token, TokenKind


@dataclass(frozen=True)
class SenseChoice:
    source: Token
    chosen: GlossEntry
    score: float
    alternatives: tuple[tuple[GlossEntry, float], ...] = field(default=())


def _safe_ppmi(model: CooccurrenceModel, g: str, h: str) -> float:
    try:
        return ppmi(model, g, h)
    except UnknownWord:
        return 0.0


def score_gloss(model: CooccurrenceModel, g: str, context: Iterable[Iterable[str]]) -> float:
    total = 0.0
    for options in context:
        total += max((_safe_ppmi(model, g, h) for h in options), default=0.0)
    return total


def _candidate_words(result: LookupResult) -> tuple[str, ...] | None:
    if isinstance(result, Glosses):
        return tuple(e.gloss for e in result.entries)
    if result.token.kind is TokenKind.WORD:
        return (result.token.text,)
    return None


def disambiguate_sentence(model: CooccurrenceModel, lex: BilingualLexicon,
                          tokens: Sequence[Token]) -> list[tuple[Token, SenseChoice | Passthrough]]:
    results = [lookup(lex, tok) for tok in tokens]
    # per-position context sets; None marks digits and signs, which carry no context
    options: list[tuple[str, ...] | None] = [_candidate_words(r) for r in results]

    resolved: list[tuple[Token, SenseChoice | Passthrough]] = []
    for i, (tok, result) in enumerate(zip(tokens, results)):
        if isinstance(result, Passthrough):
            resolved.append((tok, result))
            continue
        entries = result.entries
        if len(entries) == 1:
            resolved.append((tok, SenseChoice(tok, entries[0], 0.0)))
            continue
        context = [opts for j, opts in enumerate(options) if j != i and opts is not None]
        scored = [(e, score_gloss(model, e.gloss, context)) for e in entries]
        best = 0
        for k in range(1, len(scored)):
            if scored[k][1] > scored[best][1]:
                best = k
        chosen, score = scored[best]
        alternatives = tuple(s for k, s in enumerate(scored) if k != best)
        resolved.append((tok, SenseChoice(tok, chosen, score, alternatives)))
        options[i] = (chosen.gloss,)
    return resolved
