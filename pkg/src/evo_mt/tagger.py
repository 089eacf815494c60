"""Rule-based POS tagging for the English side of the direct translation."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType

from .errors import IoFailure, MalformedRow
from .tokenizer import TokenKind, classify

TAGSET = frozenset({
    "PRP", "DT", "JJ", "JJR", "JJS", "NN", "NNS", "NNP",
    "VB", "VBD", "VBZ", "VBG", "VBN", "VBP", "RB", "IN", "CD", "SYM",
})

# first match wins
SUFFIX_RULES = (
    ("ly", "RB"),
    ("ing", "VBG"),
    ("ed", "VBD"),
    ("est", "JJS"),
    ("er", "JJR"),
    ("s", "NNS"),
)
DEFAULT_TAG = "NN"


@dataclass(frozen=True)
class TaggedToken:
    text: str
    tag: str

    def __str__(self):
        return f"{self.text}/{self.tag}"


class TagLexicon(Mapping):
    """Immutable ``word -> tag`` table; keys are lower-cased."""

    def __init__(self, entries: Mapping[str, str] | None = None):
        table = {}
        for word, tag in (entries or {}).items():
            if tag not in TAGSET:
                raise ValueError(f"tag {tag!r} for {word!r} is not in the tagset")
            table[word.lower()] = tag
        self._table = MappingProxyType(table)

    def __getitem__(self, word):
        return self._table[word.lower()]

    def __contains__(self, word):
        return isinstance(word, str) and word.lower() in self._table

    def __iter__(self):
        return iter(self._table)

    def __len__(self):
        return len(self._table)


def load_taglex(path) -> TagLexicon:
    """Read ``word<TAB>TAG`` rows; ``#`` lines and blank lines are skipped."""
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise IoFailure(f"cannot read tag lexicon {path}: {exc}") from exc
    entries: dict[str, str] = {}
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedRow(path, lineno, f"expected 2 tab-separated fields, got {len(fields)}")
        word, tag = fields
        if tag not in TAGSET:
            raise MalformedRow(path, lineno, f"unknown POS tag {tag!r}")
        entries.setdefault(word.lower(), tag)
    return TagLexicon(entries)


def tag_word(taglex: Mapping[str, str], text: str, dict_tag: str | None = None) -> str:
    if dict_tag is not None:
        return dict_tag
    if text in taglex:
        return taglex[text]
    kind = classify(text)
    if kind is TokenKind.DIGIT:
        return "CD"
    if kind is TokenKind.SIGN:
        return "SYM"
    lower = text.lower()
    for suffix, tag in SUFFIX_RULES:
        if len(lower) > len(suffix) and lower.endswith(suffix):
            return tag
    return DEFAULT_TAG


def tag_tokens(taglex: Mapping[str, str],
               tokens: Iterable[tuple[str, str | None]]) -> list[TaggedToken]:
    """Tag ``(text, dictionary_tag_or_None)`` pairs.

    Priority is dictionary tag, then the tag lexicon, then CD/SYM for digit and
    sign tokens, then suffix rules, then ``NN``.
    """
    return [TaggedToken(text, tag_word(taglex, text, dict_tag)) for text, dict_tag in tokens]


def parse_tagged(text: str) -> list[TaggedToken]:
    """Parse whitespace-separated ``word/TAG`` items (the split is on the last slash)."""
    out = []
    for item in text.split():
        word, sep, tag = item.rpartition("/")
        if not sep or not word:
            raise ValueError(f"expected word/TAG, got {item!r}")
        if tag not in TAGSET:
            raise ValueError(f"unknown POS tag {tag!r} in {item!r}")
        out.append(TaggedToken(word, tag))
    return out


def load_default_taglex() -> TagLexicon:
    return load_taglex(Path(__file__).parent / "data" / "taglex.tsv")
