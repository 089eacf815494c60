"""Sentence-level co-occurrence counts with PMI / PPMI scoring.

P(x) is a word's share of all word tokens and P(x, y) is a pair's share of
all pair occurrences. A pair occurrence is one unordered pair of distinct
word types sharing a sentence (or sharing a window, when one is set).
"""
from __future__ import annotations

import math
import zlib
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType

from .errors import (ChecksumMismatch, EmptyCorpus, FormatVersionMismatch, IoFailure,
                     ModelFormatError, NoPairData, UnknownWord)
from .tokenizer import TokenKind, tokenize

FORMAT_HEADER = "ppmi-model v1"


def pair_key(x: str, y: str) -> tuple[str, str]:
    return (x, y) if x < y else (y, x)


def normalize(word: str) -> str:
    return word.lower()


@dataclass(frozen=True, eq=False)
class CooccurrenceModel:
    unigram: Mapping[str, int]
    pair: Mapping[tuple[str, str], int]
    total_tokens: int
    total_pairs: int
    window: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "unigram", MappingProxyType(dict(self.unigram)))
        object.__setattr__(self, "pair", MappingProxyType(dict(self.pair)))

    def __eq__(self, other):
        if not isinstance(other, CooccurrenceModel):
            return NotImplemented
        return (dict(self.unigram) == dict(other.unigram)
                and dict(self.pair) == dict(other.pair)
                and self.total_tokens == other.total_tokens
                and self.total_pairs == other.total_pairs)

    __hash__ = None

    def __contains__(self, word):
        return normalize(word) in self.unigram

    def pair_count(self, x: str, y: str) -> int:
        return self.pair.get(pair_key(normalize(x), normalize(y)), 0)

    def p_word(self, x: str) -> float:
        return self._count(x) / self.total_tokens

    def p_pair(self, x: str, y: str) -> float:
        if self.total_pairs == 0:
            return 0.0
        return self.pair_count(x, y) / self.total_pairs

    def _count(self, word: str) -> int:
        try:
            return self.unigram[normalize(word)]
        except KeyError:
            raise UnknownWord(word) from None


def _sentence_words(sentence: str) -> list[str]:
    return [normalize(t.text) for t in tokenize(sentence) if t.kind is TokenKind.WORD]


def build_model(corpus: Iterable[str], window: int | None = None) -> CooccurrenceModel:
    """Count unigrams and co-occurring type pairs over ``corpus`` sentences.

    ``window=None`` pairs every two distinct types in a sentence; an integer
    only pairs types occurring within ``window`` token positions of each other.
    Each distinct pair counts once per sentence either way.
    """
    if window is not None and window < 1:
        raise ValueError("window must be a positive integer or None")
    unigram: Counter[str] = Counter()
    pairs: Counter[tuple[str, str]] = Counter()
    for sentence in corpus:
        words = _sentence_words(sentence)
        unigram.update(words)
        if window is None:
            found = {pair_key(a, b) for a, b in combinations(set(words), 2)}
        else:
            found = set()
            for i, a in enumerate(words):
                for b in words[i + 1:i + 1 + window]:
                    if a != b:
                        found.add(pair_key(a, b))
        pairs.update(found)
    total = sum(unigram.values())
    if total == 0:
        raise EmptyCorpus("corpus contains no word tokens")
    return CooccurrenceModel(unigram, pairs, total, sum(pairs.values()), window)


def pmi(model: CooccurrenceModel, x: str, y: str) -> float:
    """log2 P(x,y) / (P(x) P(y)) in bits."""
    px = model.p_word(x)
    py = model.p_word(y)
    count = model.pair_count(x, y) if normalize(x) != normalize(y) else 0
    if count == 0:
        raise NoPairData(f"no co-occurrence data for ({x!r}, {y!r})")
    return math.log2((count / model.total_pairs) / (px * py))


def ppmi(model: CooccurrenceModel, x: str, y: str) -> float:
    try:
        value = pmi(model, x, y)
    except NoPairData:
        return 0.0
    return value if value > 0.0 else 0.0


def dumps_model(model: CooccurrenceModel) -> bytes:
    lines = [FORMAT_HEADER, f"tokens {model.total_tokens}", f"pairs {model.total_pairs}"]
    lines += [f"u {w} {c}" for w, c in sorted(model.unigram.items())]
    lines += [f"p {a} {b} {c}" for (a, b), c in sorted(model.pair.items())]
    body = ("\n".join(lines) + "\n").encode("utf-8")
    return body + f"crc32 {zlib.crc32(body):08x}\n".encode("ascii")


def loads_model(data: bytes) -> CooccurrenceModel:
    first = data.split(b"\n", 1)[0].decode("utf-8", "replace").rstrip("\r")
    if first != FORMAT_HEADER:
        if first.startswith("ppmi-model "):
            raise FormatVersionMismatch(f"unsupported model version {first!r}")
        raise ModelFormatError(f"not a model file (header {first!r})")

    body, sep, tail = data[:-1].rpartition(b"\n")
    if not data.endswith(b"\n") or not sep or not tail.startswith(b"crc32 "):
        raise ChecksumMismatch("checksum line missing (truncated file?)")
    body += b"\n"
    try:
        expected = int(tail[6:].decode("ascii"), 16)
    except ValueError:
        raise ChecksumMismatch("unreadable checksum") from None
    if zlib.crc32(body) != expected:
        raise ChecksumMismatch("checksum does not match contents")

    lines = body.decode("utf-8").splitlines()
    try:
        tokens = int(lines[1].removeprefix("tokens "))
        total_pairs = int(lines[2].removeprefix("pairs "))
        unigram: dict[str, int] = {}
        pairs: dict[tuple[str, str], int] = {}
        for line in lines[3:]:
            parts = line.split(" ")
            if parts[0] == "u" and len(parts) == 3:
                unigram[parts[1]] = int(parts[2])
            elif parts[0] == "p" and len(parts) == 4:
                pairs[(parts[1], parts[2])] = int(parts[3])
            else:
                raise ModelFormatError(f"bad model row {line!r}")
    except (IndexError, ValueError) as exc:
        raise ModelFormatError(str(exc)) from exc
    if sum(unigram.values()) != tokens or sum(pairs.values()) != total_pairs:
        raise ModelFormatError("row counts disagree with header totals")
    return CooccurrenceModel(unigram, pairs, tokens, total_pairs)


def save_model(model: CooccurrenceModel, path) -> None:
    try:
        with open(path, "wb") as fh:
            fh.write(dumps_model(model))
    except OSError as exc:
        raise IoFailure(f"cannot write model {path}: {exc}") from exc


def load_model(path) -> CooccurrenceModel:
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read model {path}: {exc}") from exc
    return loads_model(data)
