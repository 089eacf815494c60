"""Evolutionary reordering of a word-for-word translation into SVO order.

A candidate is a permutation of token positions. Children are made by paste
mutation (remove one token, reinsert it at a random offset), fitness is the
edit distance between the candidate's tag sequence and a target tag
sequence, and the fittest of parent and children seeds the next generation.
"""
from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from . import kernels
from ._kernels import Lcg, paste
from .chunker import Chunk, ChunkGrammar, chunk
from .errors import NoVerbFound
from .tagger import TaggedToken

__all__ = [
    "Candidate", "EaConfig", "EvolutionReport", "Lcg", "TerminatedBy", "TraceEntry",
    "derive_target", "evolve", "fitness", "format_trace", "mutate",
]


@dataclass(frozen=True)
class EaConfig:
    children_per_generation: int = 100
    max_generations: int = 1000
    seed: int = 0
    anchor_trailing_sign: bool = True
    # Let a child that ties the parent replace it. Without this the search
    # stalls on plateaus such as reversing three tokens, where every single
    # paste of the parent leaves the distance unchanged.
    sideways_moves: bool = True

    def __post_init__(self):
        if self.children_per_generation < 1:
            raise ValueError("children_per_generation must be positive")
        if self.max_generations < 1:
            raise ValueError("max_generations must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


class TerminatedBy(str, enum.Enum):
    FITNESS_ZERO = "FitnessZero"
    GENERATION_CAP = "GenerationCap"


@dataclass(frozen=True)
class Candidate:
    order: tuple[int, ...]
    fitness: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"order {self.order} is not a permutation")


@dataclass(frozen=True)
class TraceEntry:
    generation: int
    best_fitness: int
    order: tuple[int, ...]

    def __str__(self):
        return f"gen {self.generation} best {self.best_fitness} order {' '.join(map(str, self.order))}"


@dataclass(frozen=True)
class EvolutionReport:
    best: Candidate
    generations_run: int
    trace: tuple[TraceEntry, ...]
    terminated_by: TerminatedBy

    def to_dict(self):
        return {
            "best": {"order": list(self.best.order), "fitness": self.best.fitness},
            "generations_run": self.generations_run,
            "terminated_by": self.terminated_by.value,
            "trace": [[e.generation, e.best_fitness, list(e.order)] for e in self.trace],
        }


def fitness(candidate_tags: Sequence[str], target_tags: Sequence[str]) -> int:
    """Unit-cost edit distance between two tag sequences."""
    return kernels.levenshtein(list(candidate_tags), list(target_tags))


def mutate(rng: Lcg, order: Sequence[int], anchored: bool = False) -> list[int]:
    """Paste mutation; with ``anchored`` the final slot never moves."""
    movable = len(order) - 1 if anchored else len(order)
    return paste(list(order), rng, movable)


def _is_verb(item) -> bool:
    if isinstance(item, Chunk):
        return item.label == "VERB"
    return item.tag.startswith("VB")


def _is_nominal(item) -> bool:
    if isinstance(item, Chunk):
        if item.label == "NP":
            return True
        for child in item.children:
            if isinstance(child, TaggedToken) and child.tag == "DT":
                continue
            return _is_nominal(child)
        return False
    return item.tag == "PRP"


def _split_pronoun(item):
    # The tagset has no possessive pronoun, so a pronoun heading an NP is a
    # subject of its own ("mama gedara" = "I home").
    if isinstance(item, Chunk) and item.label == "NP" and len(item.children) > 1:
        head = item.children[0]
        if isinstance(head, TaggedToken) and head.tag == "PRP":
            return [head, Chunk("NP", item.children[1:])]
    return [item]


def _tags(item) -> list[str]:
    if isinstance(item, Chunk):
        return [t.tag for t in item.tokens]
    return [item.tag]


def derive_target(tagged: Sequence[TaggedToken], grammar: ChunkGrammar,
                  anchor_trailing_sign: bool = True) -> list[str]:
    """Target tag sequence in subject-verb-rest order.

    Raises NoVerbFound (carrying the input tag order) when nothing is a verb.
    """
    tagged = list(tagged)
    tail: list[TaggedToken] = []
    if anchor_trailing_sign and tagged and tagged[-1].tag == "SYM":
        tail = [tagged.pop()]
    if not any(t.tag.startswith("VB") for t in tagged):
        raise NoVerbFound([t.tag for t in tagged + tail])

    units = []
    for item in chunk(grammar, tagged).items:
        units.extend(_split_pronoun(item))

    subject: list[int] = []
    for k, unit in enumerate(units):
        if _is_nominal(unit):
            subject = [k]
            prev = units[k - 1] if k else None
            if isinstance(prev, TaggedToken) and prev.tag == "DT":
                subject.insert(0, k - 1)
            break
    verbs = [k for k, unit in enumerate(units) if k not in subject and _is_verb(unit)]
    placed = set(subject) | set(verbs)
    rest = [k for k in range(len(units)) if k not in placed]

    target: list[str] = []
    for k in subject + verbs + rest:
        target.extend(_tags(units[k]))
    target.extend(t.tag for t in tail)
    return target


def evolve(tagged: Sequence[TaggedToken], target: Sequence[str], config: EaConfig = EaConfig(),
           unit: str = "tag", backend=None) -> EvolutionReport:
    """Search token orders of ``tagged`` whose ``unit`` sequence matches ``target``.

    ``unit`` is ``"tag"`` in production; ``"text"`` compares words (tests only).
    ``backend`` overrides the kernel module chosen at import.
    """
    if unit not in ("tag", "text"):
        raise ValueError("unit must be 'tag' or 'text'")
    backend = backend or kernels.backend
    symbols = [getattr(t, unit) for t in tagged]
    codes: dict[str, int] = {}
    seq = [codes.setdefault(s, len(codes)) for s in symbols]
    goal = [codes.setdefault(s, len(codes)) for s in target]
    anchored = bool(config.anchor_trailing_sign and tagged and tagged[-1].tag == "SYM")

    order, best_fit, raw_trace = backend.evolve_core(
        seq, goal, config.children_per_generation, config.max_generations,
        config.seed, anchored, config.sideways_moves)
    trace = tuple(TraceEntry(k, f, tuple(o)) for k, (f, o) in enumerate(raw_trace, 1))
    return EvolutionReport(
        best=Candidate(tuple(order), best_fit),
        generations_run=len(trace),
        trace=trace,
        terminated_by=TerminatedBy.FITNESS_ZERO if best_fit == 0 else TerminatedBy.GENERATION_CAP,
    )


def format_trace(report: EvolutionReport) -> str:
    return "".join(f"{entry}\n" for entry in report.trace)
