"""Bilingual Sinhala-to-English dictionary.

File format: UTF-8, one sense per row, ``source<TAB>gloss<TAB>POS``. Lines
starting with ``#`` in column 1 are comments. LF and CRLF endings both load.
The first listed gloss of a word is its default sense.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Union

from .errors import IoFailure, MalformedRow
from .tagger import TAGSET
from .tokenizer import Token, TokenKind


@dataclass(frozen=True)
class GlossEntry:
    gloss: str
    pos: str

    def __post_init__(self):
        if not self.gloss or "\t" in self.gloss or "\n" in self.gloss:
            raise ValueError(f"invalid gloss {self.gloss!r}")
        if self.pos not in TAGSET:
            raise ValueError(f"unknown POS tag {self.pos!r}")


@dataclass(frozen=True)
class Glosses:
    entries: tuple[GlossEntry, ...]


@dataclass(frozen=True)
class Passthrough:
    token: Token


LookupResult = Union[Glosses, Passthrough]


class BilingualLexicon:
    def __init__(self, entries: dict[str, list[GlossEntry]] | None = None):
        self._entries = MappingProxyType(
            {src.lower(): tuple(glosses) for src, glosses in (entries or {}).items() if glosses}
        )

    @property
    def entries(self):
        return self._entries

    @property
    def entry_count(self) -> int:
        return len(self._entries)

    def __contains__(self, word):
        return word.lower() in self._entries

    def __len__(self):
        return len(self._entries)

    def glosses(self, word: str) -> tuple[GlossEntry, ...]:
        return self._entries.get(word.lower(), ())

    def pos_of(self, gloss: str) -> str | None:
        """POS of the first dictionary sense spelled ``gloss``, if any."""
        for senses in self._entries.values():
            for entry in senses:
                if entry.gloss == gloss:
                    return entry.pos
        return None


def load_lexicon(path) -> BilingualLexicon:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            lines = fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise IoFailure(f"cannot read lexicon {path}: {exc}") from exc

    entries: dict[str, list[GlossEntry]] = {}
    seen: set[tuple[str, str]] = set()
    for lineno, line in enumerate(lines, 1):
        if line.startswith("#") or not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedRow(path, lineno, f"expected 3 tab-separated fields, got {len(fields)}")
        source, gloss, pos = fields
        if not source or not gloss:
            raise MalformedRow(path, lineno, "empty source or gloss")
        if pos not in TAGSET:
            raise MalformedRow(path, lineno, f"unknown POS tag {pos!r}")
        key = source.lower()
        if (key, gloss) in seen:
            continue
        seen.add((key, gloss))
        entries.setdefault(key, []).append(GlossEntry(gloss, pos))
    return BilingualLexicon(entries)


def lookup(lex: BilingualLexicon, token: Token) -> LookupResult:
    if token.kind is TokenKind.WORD:
        senses = lex.glosses(token.text)
        if senses:
            return Glosses(senses)
    return Passthrough(token)


def load_default_lexicon() -> BilingualLexicon:
    return load_lexicon(Path(__file__).parent / "data" / "lexicon.tsv")
