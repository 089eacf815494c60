"""Sentence splitting and word/digit/sign tokenization.

Word characters are Unicode letters, combining marks, non-decimal numerics
and the zero-width joiners Sinhala uses inside conjuncts. Decimal digits form
Digit runs. Any other non-whitespace character is a one-character Sign token.
"""
from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass

_SENTENCE_BREAK = re.compile(r"(?<=[.?!])\s+")
_JOINERS = {"\u200c", "\u200d"}


class TokenKind(str, enum.Enum):
    WORD = "Word"
    DIGIT = "Digit"
    SIGN = "Sign"


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind

    def __str__(self):
        return self.text


def char_kind(ch: str) -> TokenKind | None:
    """Class of a single character, or None for whitespace."""
    if ch.isspace():
        return None
    if ch.isdecimal():
        return TokenKind.DIGIT
    cat = unicodedata.category(ch)
    if cat[0] in "LMN" or ch in _JOINERS:
        return TokenKind.WORD
    return TokenKind.SIGN


def classify(text: str) -> TokenKind:
    """Kind of an already-split token; mixed text counts as a Word."""
    kinds = {char_kind(c) for c in text}
    if kinds == {TokenKind.DIGIT}:
        return TokenKind.DIGIT
    if kinds == {TokenKind.SIGN}:
        return TokenKind.SIGN
    return TokenKind.WORD


def split_sentences(text: str) -> list[str]:
    stripped = text.strip()
    if not stripped:
        return []
    return _SENTENCE_BREAK.split(stripped)


def tokenize(sentence: str) -> list[Token]:
    tokens: list[Token] = []
    buf: list[str] = []
    buf_kind = None

    def flush():
        if buf:
            tokens.append(Token("".join(buf), buf_kind))
            buf.clear()

    for ch in sentence:
        kind = char_kind(ch)
        if kind is None:
            flush()
        elif kind is TokenKind.SIGN:
            flush()
            tokens.append(Token(ch, TokenKind.SIGN))
        elif kind is buf_kind:
            buf.append(ch)
        else:
            flush()
            buf.append(ch)
            buf_kind = kind
    flush()
    return tokens

