"""Brute-force reference implementations.

Nothing here reuses the lattice, valuation or realizer code: downsets come
from filtering every subset, chains from explicit backtracking, and
completeness from fixpoint closures recomputed per segment.
"""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from .errors import SizeLimitExceeded
from .limits import default_limit
from .poset import Poset

NAIVE_MAX_ELEMENTS = 24


def downsets_naive(p: Poset) -> list[frozenset[str]]:
    k = len(p)
    if k > NAIVE_MAX_ELEMENTS:
        raise SizeLimitExceeded(f"naive filter is limited to {NAIVE_MAX_ELEMENTS} elements")
    els = p.elements
    out = []
    for bits in range(1 << k):
        s = {els[i] for i in range(k) if bits >> i & 1}
        if all(x in s for y in s for x in els if p.le(x, y)):
            out.append(frozenset(s))
    return out


def chains_ending_at(q: Poset, y: str) -> list[tuple[str, ...]]:
    """Every chain of ``q`` whose maximum is ``y``, listed bottom-up."""
    out = []

    def grow(top: tuple[str, ...]) -> None:
        out.append(top)
        for x in q.elements:
            if q.lt(x, top[0]):
                grow((x,) + top)

    grow((y,))
    return sorted(out)


def all_chains(q: Poset) -> list[tuple[str, ...]]:
    """All nonempty chains of ``q``."""
    return [c for y in q.elements for c in chains_ending_at(q, y)]


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _sums(downsets: list[frozenset[str]], w: dict[str, int]) -> list[int]:
    return [sum(w[x] for x in d) for d in downsets]


def valuation_is_complete_naive(downsets: Sequence[frozenset[str]], values: Sequence[int]) -> bool:
    """Definition-level completeness test for a bijective value table."""
    n = len(downsets)
    value_of = dict(zip(downsets, values))
    ranked = sorted(downsets, key=value_of.__getitem__)

    def closure(items, op):
        result = set(items)
        while True:
            extra = {op(a, b) for a in result for b in result} - result
            if not extra:
                return result
            result |= extra

    for j in range(1, n + 1):
        got = {value_of[d] for d in closure(ranked[:j], frozenset.union)}
        if got != set(range(max(got) + 1)):
            return False
        got = {value_of[d] for d in closure(ranked[n - j:], frozenset.intersection)}
        if got != set(range(min(got), n)):
            return False
    return True


def _candidates(p: Poset, limit: int | None):
    downsets = downsets_naive(p)
    n, k = len(downsets), len(p)
    limit = default_limit() if limit is None else limit
    count = comb(n - 2, k - 1) if k else 1
    if count > limit:
        raise SizeLimitExceeded(f"{count} candidate weight functions exceed the limit {limit}")
    for parts in _compositions(n - 1, k):
        yield downsets, dict(zip(p.elements, parts))


def search_bijective_valuations(p: Poset, limit: int | None = None) -> list[dict[str, int]]:
    """Weight functions (all positive, total n-1) whose valuation is bijective."""
    found = []
    for downsets, w in _candidates(p, limit):
        if len(set(_sums(downsets, w))) == len(downsets):
            found.append(w)
    return found


def search_complete_valuations(p: Poset, limit: int | None = None) -> list[dict[str, int]]:
    found = []
    for downsets, w in _candidates(p, limit):
        values = _sums(downsets, w)
        if len(set(values)) == len(downsets) and valuation_is_complete_naive(downsets, values):
            found.append(w)
    return found


def count_candidates(p: Poset) -> int:
    n, k = len(downsets_naive(p)), len(p)
    return comb(n - 2, k - 1) if k else 1
