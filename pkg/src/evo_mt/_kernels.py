"""Pure-Python EA kernels.

Used when the compiled ``_ckernels`` extension is unavailable. Both backends
must produce identical results for identical inputs, including RNG draws.
"""
from __future__ import annotations

from collections.abc import Sequence

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1
_SPAN32 = 1 << 32


class Lcg:
    """64-bit linear congruential generator; each draw yields the top 32 bits of the new state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u32(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & _MASK64
        return self.state >> 32

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = _SPAN32 - _SPAN32 % bound
        while True:
            r = self.next_u32()
            if r < limit:
                return r % bound


def levenshtein(a: Sequence, b: Sequence) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, 1):
        cur = [i]
        for j, y in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def paste(order: list[int], rng: Lcg, movable: int) -> list[int]:
    """Move one element among the first ``movable`` slots to a random offset."""
    out = list(order)
    if movable <= 1:
        return out
    i = rng.below(movable)
    d = 1 + rng.below(movable - 1)
    out.insert((i + d) % movable, out.pop(i))
    return out


def evolve_core(seq: Sequence[int], target: Sequence[int], children: int,
                max_generations: int, seed: int, anchored: bool, sideways: bool):
    """Single-parent elitist search over orders of ``seq``.

    Returns ``(best_order, best_fitness, trace)`` where ``trace`` holds one
    ``(fitness, order)`` pair per generation run.
    """
    n = len(seq)
    rng = Lcg(seed)
    movable = n - 1 if anchored else n
    target = list(target)
    parent = list(range(n))
    parent_fit = levenshtein([seq[k] for k in parent], target)
    trace = []
    while parent_fit > 0 and len(trace) < max_generations:
        best_child = None
        best_fit = -1
        for _ in range(children):
            child = paste(parent, rng, movable)
            fit = levenshtein([seq[k] for k in child], target)
            if best_child is None or fit < best_fit:
                best_child, best_fit = child, fit
        if best_child is not None and (best_fit < parent_fit or (sideways and best_fit == parent_fit)):
            parent, parent_fit = best_child, best_fit
        trace.append((parent_fit, tuple(parent)))
    return parent, parent_fit, trace
