"""Downset lattice of a poset and the Birkhoff correspondences.

Lattice elements are downset bitmasks over the poset's element order;
join and meet are bitwise or/and.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import NotAnAntichain, SizeLimitExceeded, UnknownDownset
from .limits import default_limit
from .poset import Poset, iter_bits, linear_extensions


def _canonical_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


@dataclass(frozen=True)
class Antichain:
    members: int

    def names(self, p: Poset) -> tuple[str, ...]:
        return p.names(self.members)


@dataclass(frozen=True)
class DownsetLattice:
    poset: Poset
    downsets: tuple[int, ...]
    index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "downsets", tuple(sorted(self.downsets, key=_canonical_key)))
        object.__setattr__(self, "index", {d: i for i, d in enumerate(self.downsets)})

    def __len__(self) -> int:
        return len(self.downsets)

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    @property
    def bottom(self) -> int:
        return self.index[0]

    @property
    def top(self) -> int:
        return self.index[self.poset.full]

    def ordinal(self, mask: int) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise UnknownDownset(f"{self.poset.names(mask)!r} is not in the lattice") from None

    def mask(self, names: Iterable[str]) -> int:
        return self.poset.mask(names)

    def label(self, mask: int) -> str:
        return ",".join(self.poset.names(mask))

    def principal(self, x: str) -> int:
        """Lower cone of ``x``."""
        return self.poset.down[self.poset.index[x]]


def downset_lattice(p: Poset, limit: int | None = None) -> DownsetLattice:
    """Enumerate downsets by deciding each element along a linear extension.

    An element may join a partial downset only once all of its predecessors
    are present, so every downset is generated exactly once.
    """
    limit = default_limit() if limit is None else limit
    ext = next(linear_extensions(p))
    partial = [0]
    for x in ext.order:
        i = p.index[x]
        below = p.down[i] & ~(1 << i)
        grown = [m | 1 << i for m in partial if below & ~m == 0]
        if len(partial) + len(grown) > limit:
            raise SizeLimitExceeded(f"more than {limit} downsets")
        partial.extend(grown)
    return DownsetLattice(p, tuple(partial))


def _require(l: DownsetLattice, *masks: int) -> None:
    for m in masks:
        if m not in l.index:
            raise UnknownDownset(f"{l.poset.names(m)!r} is not in the lattice")


def join(l: DownsetLattice, s: int, t: int) -> int:
    _require(l, s, t)
    return s | t


def meet(l: DownsetLattice, s: int, t: int) -> int:
    _require(l, s, t)
    return s & t


def antichain_of(l: DownsetLattice, downset: int) -> Antichain:
    _require(l, downset)
    up = l.poset.up
    return Antichain(sum(1 << i for i in iter_bits(downset) if up[i] & downset == 1 << i))


def downset_of_antichain(l: DownsetLattice, a: Antichain | int) -> int:
    members = a.members if isinstance(a, Antichain) else a
    p = l.poset
    if not p.is_antichain(members):
        raise NotAnAntichain(f"{p.names(members)!r} has comparable members")
    out = 0
    for i in iter_bits(members):
        out |= p.down[i]
    return out


def delta(l: DownsetLattice, downset: int) -> int:
    """Complementary upset of a downset."""
    _require(l, downset)
    return l.poset.full & ~downset
