"""Finite posets stored as bitset rows, linear extensions and realizers.

Element ``i`` of a poset is bit ``1 << i`` in every mask produced here; the
bit order follows the element sequence given at construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    DuplicateElement,
    InvalidRealizer,
    NotALinearExtension,
    NotAPermutation,
    UnknownElement,
)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset.

    ``up[i]`` is the mask of all ``j`` with ``elements[i] <= elements[j]``;
    ``down[i]`` is the transposed row. Use :func:`build_poset` for arbitrary
    relations; the constructor only accepts already closed relations.
    """

    elements: tuple[str, ...]
    up: tuple[int, ...]
    down: tuple[int, ...] = field(init=False, repr=False, compare=False)
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        k = len(self.elements)
        if len(set(self.elements)) != k:
            raise DuplicateElement(_first_duplicate(self.elements))
        if len(self.up) != k:
            raise ValueError("one relation row per element required")
        full = (1 << k) - 1
        for i, row in enumerate(self.up):
            if row & ~full:
                raise UnknownElement(f"row {self.elements[i]} has bits outside the ground set")
            if not row >> i & 1:
                raise ValueError(f"relation is not reflexive at {self.elements[i]}")
        down = [0] * k
        for i, row in enumerate(self.up):
            for j in iter_bits(row):
                down[j] |= 1 << i
        for i, row in enumerate(self.up):
            same = row & down[i] & ~(1 << i)
            if same:
                j = next(iter_bits(same))
                raise CycleDetected(f"{self.elements[i]} <= {self.elements[j]} <= {self.elements[i]}")
            for j in iter_bits(row):
                if self.up[j] & ~row:
                    raise ValueError("relation is not transitive")
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "index", {x: i for i, x in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def le(self, x: str, y: str) -> bool:
        return bool(self.up[self.index[x]] >> self.index[y] & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.le(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return self.le(x, y) or self.le(y, x)

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for x in names:
            try:
                m |= 1 << self.index[x]
            except KeyError:
                raise UnknownElement(x) from None
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in iter_bits(mask))

    def pairs(self) -> list[tuple[str, str]]:
        """All strict relations ``x < y`` in canonical order."""
        return [
            (self.elements[i], self.elements[j])
            for i, row in enumerate(self.up)
            for j in iter_bits(row)
            if i != j
        ]

    def covers(self) -> list[tuple[str, str]]:
        out = []
        for i, row in enumerate(self.up):
            strict = row & ~(1 << i)
            for j in iter_bits(strict):
                between = strict & self.down[j] & ~(1 << j)
                if not between:
                    out.append((self.elements[i], self.elements[j]))
        return out

    def is_downset(self, mask: int) -> bool:
        return all(self.down[i] & ~mask == 0 for i in iter_bits(mask))

    def is_upset(self, mask: int) -> bool:
        return all(self.up[i] & ~mask == 0 for i in iter_bits(mask))

    def is_antichain(self, mask: int) -> bool:
        return all(self.up[i] & mask == 1 << i for i in iter_bits(mask))

    def is_chain(self) -> bool:
        return not incomparable_pairs(self)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "le": [list(p) for p in self.covers()]}


def _first_duplicate(seq: Sequence[str]) -> str:
    seen = set()
    for x in seq:
        if x in seen:
            return x
        seen.add(x)
    return ""


def build_poset(elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Poset:
    """Poset generated by the ``x <= y`` assertions in ``pairs``."""
    elements = tuple(elements)
    index: dict[str, int] = {}
    for i, x in enumerate(elements):
        if x in index:
            raise DuplicateElement(x)
        index[x] = i
    k = len(elements)
    up = [1 << i for i in range(k)]
    for x, y in pairs:
        for z in (x, y):
            if z not in index:
                raise UnknownElement(z)
        up[index[x]] |= 1 << index[y]
    # Warshall on bit rows
    for m in range(k):
        bit = 1 << m
        row_m = up[m]
        for i in range(k):
            if up[i] & bit:
                up[i] |= row_m
    for i in range(k):
        for j in iter_bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CycleDetected(f"{elements[i]} <= {elements[j]} <= {elements[i]}")
    return Poset(elements, tuple(up))


def chain(elements: Sequence[str]) -> Poset:
    return build_poset(elements, zip(elements, elements[1:]))


def antichain(elements: Sequence[str]) -> Poset:
    return build_poset(elements, ())


def standard_example(m: int) -> Poset:
    """S_m: minimal a1..am, maximal b1..bm, ai < bj iff i != j."""
    a = [f"a{i}" for i in range(1, m + 1)]
    b = [f"b{i}" for i in range(1, m + 1)]
    return build_poset(a + b, [(a[i], b[j]) for i in range(m) for j in range(m) if i != j])


def dual_poset(p: Poset) -> Poset:
    return Poset(p.elements, p.down)


def incomparable_pairs(p: Poset) -> set[frozenset[str]]:
    return {
        frozenset((x, y))
        for x, y in combinations(p.elements, 2)
        if not p.comparable(x, y)
    }


@dataclass(frozen=True)
class LinearExtension:
    order: tuple[str, ...]

    @property
    def position(self) -> dict[str, int]:
        """Element -> rank, counted from 1."""
        return {x: j for j, x in enumerate(self.order, start=1)}

    def __getitem__(self, j: int) -> str:
        return self.order[j]

    def __len__(self) -> int:
        return len(self.order)

    def reversed(self) -> LinearExtension:
        return LinearExtension(tuple(reversed(self.order)))


def _check_permutation(p: Poset, seq: Sequence[str]) -> tuple[str, ...]:
    seq = tuple(seq)
    if len(seq) != len(p) or set(seq) != set(p.elements):
        raise NotAPermutation(f"{seq!r} is not a permutation of {p.elements!r}")
    return seq


def is_linear_extension(p: Poset, seq: Sequence[str]) -> bool:
    seq = _check_permutation(p, seq)
    seen = 0
    for x in seq:
        i = p.index[x]
        if p.down[i] & ~(1 << i) & ~seen:
            return False
        seen |= 1 << i
    return True


def linear_extension(p: Poset, seq: Sequence[str]) -> LinearExtension:
    if not is_linear_extension(p, seq):
        raise NotALinearExtension(f"{tuple(seq)!r} does not respect the order")
    return LinearExtension(tuple(seq))


def linear_extensions(p: Poset) -> Iterator[LinearExtension]:
    """All linear extensions, lexicographic in the canonical element order."""
    k = len(p)
    strict_down = [p.down[i] & ~(1 << i) for i in range(k)]
    order: list[int] = []

    def extend(placed: int) -> Iterator[LinearExtension]:
        if len(order) == k:
            yield LinearExtension(tuple(p.elements[i] for i in order))
            return
        for i in range(k):
            if not placed >> i & 1 and strict_down[i] & ~placed == 0:
                order.append(i)
                yield from extend(placed | 1 << i)
                order.pop()

    yield from extend(0)


@dataclass(frozen=True)
class Realizer:
    lambda1: LinearExtension
    lambda2: LinearExtension

    def to_json(self) -> dict:
        return {"lambda1": list(self.lambda1.order), "lambda2": list(self.lambda2.order)}


def _realizer_defect(p: Poset, l1: Sequence[str], l2: Sequence[str]) -> str | None:
    for name, seq in (("lambda1", l1), ("lambda2", l2)):
        if not is_linear_extension(p, seq):
            return f"{name} is not a linear extension"
    pos1 = {x: j for j, x in enumerate(l1)}
    pos2 = {x: j for j, x in enumerate(l2)}
    for pair in sorted(incomparable_pairs(p), key=sorted):
        x, y = sorted(pair)
        if (pos1[x] < pos1[y]) == (pos2[x] < pos2[y]):
            return f"incomparable pair {x},{y} ordered alike"
    return None


def make_realizer(p: Poset, l1: Sequence[str], l2: Sequence[str]) -> Realizer:
    """Validated realizer; raises InvalidRealizer with the first defect."""
    l1 = tuple(l1.order if isinstance(l1, LinearExtension) else l1)
    l2 = tuple(l2.order if isinstance(l2, LinearExtension) else l2)
    try:
        defect = _realizer_defect(p, l1, l2)
    except NotAPermutation as exc:
        raise InvalidRealizer(str(exc)) from None
    if defect:
        raise InvalidRealizer(defect)
    return Realizer(LinearExtension(l1), LinearExtension(l2))


def complementary_poset(p: Poset, r: Realizer, variant: str = "Q") -> Poset:
    """Poset realized by (lambda1, reversed lambda2), or its dual for ``Qprime``.

    ``x <' y`` in Q iff x precedes y in lambda1 and follows it in lambda2.
    """
    if variant not in ("Q", "Qprime"):
        raise ValueError(f"unknown variant {variant!r}")
    try:
        defect = _realizer_defect(p, r.lambda1.order, r.lambda2.order)
    except NotAPermutation as exc:
        raise InvalidRealizer(str(exc)) from None
    if defect:
        raise InvalidRealizer(defect)
    k = len(p)
    pos1 = [0] * k
    pos2 = [0] * k
    for j, x in enumerate(r.lambda1.order):
        pos1[p.index[x]] = j
    for j, x in enumerate(r.lambda2.order):
        pos2[p.index[x]] = j
    up = []
    for i in range(k):
        row = 1 << i
        for j in range(k):
            if pos1[i] < pos1[j] and pos2[j] < pos2[i]:
                row |= 1 << j
        up.append(row)
    q = Poset(p.elements, tuple(up))
    return q if variant == "Q" else dual_poset(q)
