"""Cascaded chunking over POS tags with a small tag-pattern grammar.

Grammar syntax, one rule per block::

    NP: {<PRP>?<JJ.*>*<NN.*>+}
    COMP: {<DT>?<NP><RB>?<VERB>}

An atom is ``<TAG>``, a prefix wildcard ``<JJ.*>``, an alternation
``<JJR|JJS>``, or ``<NAME>`` naming an earlier rule, optionally followed by
``?``, ``*`` or ``+``. Whitespace is ignored everywhere, including inside the
angle brackets, and a doubled closing bracket left by a line wrap
(``<DT>`` newline ``>?``) is absorbed, so wrapped rules still parse.

Rules run in order. Each rule scans the current sequence left to right, takes
the longest match at each start, and replaces it with a chunk that later rules
can match by label.
"""
from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .errors import DuplicateRule, ForwardReference, GrammarSyntaxError, IoFailure
from .tagger import TAGSET, TaggedToken

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_$]*")
QUANTIFIERS = ("?", "*", "+")


@dataclass(frozen=True)
class Atom:
    kind: str  # "tag", "prefix", "alt" or "chunk"
    values: tuple[str, ...]
    quant: str = ""

    def matches(self, item) -> bool:
        if isinstance(item, Chunk):
            return self.kind == "chunk" and item.label == self.values[0]
        if self.kind == "chunk":
            return False
        tag = item.tag
        if self.kind == "prefix":
            return tag.startswith(self.values[0])
        return tag in self.values

    def __str__(self):
        if self.kind == "prefix":
            body = self.values[0] + ".*"
        else:
            body = "|".join(self.values)
        return f"<{body}>{self.quant}"


@dataclass(frozen=True)
class ChunkRule:
    name: str
    atoms: tuple[Atom, ...]

    def __str__(self):
        return f"{self.name}: {{{''.join(map(str, self.atoms))}}}"


@dataclass(frozen=True)
class ChunkGrammar:
    rules: tuple[ChunkRule, ...]

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __getitem__(self, key):
        if isinstance(key, str):
            for rule in self.rules:
                if rule.name == key:
                    return rule
            raise KeyError(key)
        return self.rules[key]

    def unparse(self) -> str:
        return "".join(f"{rule}\n" for rule in self.rules)


@dataclass(frozen=True)
class Chunk:
    label: str
    children: tuple[Union["Chunk", TaggedToken], ...]

    @property
    def tokens(self) -> tuple[TaggedToken, ...]:
        out: list[TaggedToken] = []
        for child in self.children:
            if isinstance(child, Chunk):
                out.extend(child.tokens)
            else:
                out.append(child)
        return tuple(out)

    def __str__(self):
        return f"[{self.label} {' '.join(map(str, self.children))}]"


Item = Union[Chunk, TaggedToken]


@dataclass(frozen=True)
class ChunkSequence:
    items: tuple[Item, ...]

    def __iter__(self):
        return iter(self.items)

    def __len__(self):
        return len(self.items)

    def tokens(self) -> list[TaggedToken]:
        out: list[TaggedToken] = []
        for item in self.items:
            if isinstance(item, Chunk):
                out.extend(item.tokens)
            else:
                out.append(item)
        return out

    def chunks(self) -> list[Chunk]:
        return [item for item in self.items if isinstance(item, Chunk)]


# -- grammar parsing ---------------------------------------------------------

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def location(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        column = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, column

    def fail(self, expected, pos=None):
        line, column = self.location(pos)
        raise GrammarSyntaxError(line, column, expected)

    def skip_space(self):
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "#":
                end = text.find("\n", self.pos)
                self.pos = len(text) if end < 0 else end
            else:
                break

    def peek(self):
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch, what=None):
        if self.peek() != ch:
            self.fail(what or repr(ch))
        self.pos += 1

    def name(self, what="rule name"):
        self.skip_space()
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.fail(what)
        self.pos = m.end()
        return m.group()


def _parse_atom_body(body: str, scanner: _Scanner, start: int,
                     defined: set[str]) -> tuple[str, tuple[str, ...]]:
    if "|" in body:
        parts = body.split("|")
        if not all(_NAME.fullmatch(p) for p in parts):
            scanner.fail("tag alternation like JJR|JJS", start)
        return "alt", tuple(parts)
    if body.endswith(".*"):
        prefix = body[:-2]
        if not _NAME.fullmatch(prefix):
            scanner.fail("tag prefix before '.*'", start)
        return "prefix", (prefix,)
    if not _NAME.fullmatch(body):
        scanner.fail("tag, tag prefix, alternation or chunk name", start)
    if body in defined:
        return "chunk", (body,)
    if body in TAGSET:
        return "tag", (body,)
    raise ForwardReference(body)


def parse_grammar(text: str) -> ChunkGrammar:
    scanner = _Scanner(text)
    defined: set[str] = set()
    rules: list[ChunkRule] = []
    while scanner.peek():
        name = scanner.name()
        if name in defined:
            raise DuplicateRule(name)
        scanner.expect(":", "':' after rule name")
        scanner.expect("{", "'{' opening the pattern")
        atoms: list[Atom] = []
        while scanner.peek() == "<":
            start = scanner.pos
            close = text.find(">", start)
            if close < 0:
                scanner.fail("'>' closing the atom", start)
            body = "".join(text[start + 1:close].split())
            kind, values = _parse_atom_body(body, scanner, start, defined)
            scanner.pos = close + 1
            # a line-wrapped atom may repeat its closing bracket: "<DT>\n >?"
            if scanner.peek() == ">":
                scanner.pos += 1
            quant = scanner.peek()
            if quant in QUANTIFIERS:
                scanner.pos += 1
            else:
                quant = ""
            atoms.append(Atom(kind, values, quant))
        if not atoms:
            scanner.fail("at least one '<atom>'")
        scanner.expect("}", "'<' or '}'")
        defined.add(name)
        rules.append(ChunkRule(name, tuple(atoms)))
    return ChunkGrammar(tuple(rules))


def load_grammar(path) -> ChunkGrammar:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise IoFailure(f"cannot read grammar {path}: {exc}") from exc
    return parse_grammar(text)


def load_default_grammar() -> ChunkGrammar:
    return load_grammar(Path(__file__).parent / "data" / "grammar.txt")


# -- matching ----------------------------------------------------------------

class _Automaton:
    """Position NFA for one rule; ``X+`` is expanded to ``X X*``."""

    def __init__(self, atoms: Sequence[Atom]):
        expanded: list[Atom] = []
        for atom in atoms:
            if atom.quant == "+":
                expanded.append(Atom(atom.kind, atom.values, ""))
                expanded.append(Atom(atom.kind, atom.values, "*"))
            else:
                expanded.append(atom)
        self.atoms = tuple(expanded)
        self.final = len(expanded)

    def _closure(self, states):
        out = set()
        stack = list(states)
        while stack:
            k = stack.pop()
            if k in out:
                continue
            out.add(k)
            if k < self.final and self.atoms[k].quant in ("?", "*"):
                stack.append(k + 1)
        return out

    def longest_match(self, items: Sequence[Item], start: int) -> int:
        """Length of the longest match beginning at ``start`` (0 if none)."""
        states = self._closure({0})
        best = 0
        pos = start
        while states and pos < len(items):
            item = items[pos]
            nxt = set()
            for k in states:
                if k < self.final and self.atoms[k].matches(item):
                    nxt.add(k if self.atoms[k].quant == "*" else k + 1)
            states = self._closure(nxt)
            pos += 1
            if self.final in states:
                best = pos - start
        return best


def apply_rule(rule: ChunkRule, items: Sequence[Item]) -> list[Item]:
    nfa = _Automaton(rule.atoms)
    out: list[Item] = []
    i = 0
    while i < len(items):
        length = nfa.longest_match(items, i)
        if length:
            out.append(Chunk(rule.name, tuple(items[i:i + length])))
            i += length
        else:
            out.append(items[i])
            i += 1
    return out


def chunk(grammar: ChunkGrammar, tagged: Sequence[TaggedToken]) -> ChunkSequence:
    items: list[Item] = list(tagged)
    for rule in grammar.rules:
        items = apply_rule(rule, items)
    return ChunkSequence(tuple(items))
