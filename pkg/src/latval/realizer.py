"""Both directions between realizers of 2-dimensional posets and complete valuations."""
from __future__ import annotations

import logging
from typing import Iterator

from .birkhoff import DownsetLattice, downset_lattice
from .errors import (
    AtTop,
    DuplicateConeValue,
    NotAPermutation,
    NotComplete,
    SizeLimitExceeded,
)
from .limits import default_limit
from .poset import (
    LinearExtension,
    Poset,
    Realizer,
    complementary_poset,
    iter_bits,
    linear_extensions,
    make_realizer,
    _realizer_defect,
)
from .valuation import (
    Valuation,
    ValueTable,
    WeightFunction,
    _table,
    dual_valuation,
    is_bijective,
    is_complete,
    valuation_from_weights,
    weights_from_valuation,
)

log = logging.getLogger(__name__)

CHECKED_MAX = 4096


def is_realizer(p: Poset, l1, l2) -> bool:
    l1 = l1.order if isinstance(l1, LinearExtension) else tuple(l1)
    l2 = l2.order if isinstance(l2, LinearExtension) else tuple(l2)
    for seq in (l1, l2):
        if len(seq) != len(p) or set(seq) != set(p.elements):
            raise NotAPermutation(f"{seq!r} is not a permutation of {p.elements!r}")
    return _realizer_defect(p, l1, l2) is None


def _conjugate(p: Poset, ext: LinearExtension) -> LinearExtension | None:
    """The only order that can pair with ``ext``, if it is transitive.

    Comparable pairs keep the poset order, incomparable ones are reversed.
    A tournament is transitive iff its score sequence is 0..k-1.
    """
    k = len(p)
    pos = [0] * k
    for j, x in enumerate(ext.order):
        pos[p.index[x]] = j
    scores = [0] * k
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            if p.up[j] >> i & 1 or (not p.up[i] >> j & 1 and pos[j] > pos[i]):
                scores[i] += 1  # j goes before i
    if sorted(scores) != list(range(k)):
        return None
    order = [None] * k
    for i, s in enumerate(scores):
        order[s] = p.elements[i]
    return LinearExtension(tuple(order))


def iter_realizers(p: Poset, budget: int | None = None) -> Iterator[Realizer]:
    """Realizers in lexicographic order of their first extension.

    The first extension is grown element by element. Placing ``z`` closes a
    3-cycle in the forced conjugate iff some placed ``a`` incomparable to
    ``z`` comes after a predecessor ``b`` of ``z`` that is incomparable to
    ``a``; such prefixes are cut. ``budget`` bounds the search nodes visited.
    """
    budget = default_limit() if budget is None else budget
    k = len(p)
    strict_down = [p.down[i] & ~(1 << i) for i in range(k)]
    order: list[int] = []
    before: list[int] = []  # before[t]: mask of the first t placed elements
    visited = 0

    def consistent(z: int) -> bool:
        below_z = strict_down[z]
        for t, a in enumerate(order):
            if not below_z >> a & 1 and below_z & before[t] & ~p.down[a]:
                return False
        return True

    def grow(placed: int) -> Iterator[Realizer]:
        nonlocal visited
        if len(order) == k:
            ext = LinearExtension(tuple(p.elements[i] for i in order))
            other = _conjugate(p, ext)
            if other is None:
                raise AssertionError("pruned search produced a non-transitive conjugate")
            yield Realizer(ext, other)
            return
        for z in range(k):
            if placed >> z & 1 or strict_down[z] & ~placed:
                continue
            visited += 1
            if visited > budget:
                raise SizeLimitExceeded(f"more than {budget} search nodes visited")
            if not consistent(z):
                continue
            before.append(placed)
            order.append(z)
            yield from grow(placed | 1 << z)
            order.pop()
            before.pop()

    yield from grow(0)


def iter_realizers_exhaustive(p: Poset) -> Iterator[Realizer]:
    """Unpruned reference: test the forced conjugate of every linear extension."""
    for ext in linear_extensions(p):
        other = _conjugate(p, ext)
        if other is not None:
            yield Realizer(ext, other)


def find_realizer(p: Poset, budget: int | None = None) -> Realizer | None:
    """First realizer of size two, or None when the dimension exceeds two."""
    return next(iter_realizers(p, budget), None)


def chain_count_weights(p: Poset, r: Realizer) -> WeightFunction:
    """Number of chains of the complementary poset that end at each element."""
    q = complementary_poset(p, r, "Q")
    k = len(p)
    w = [0] * k
    # lambda1 is a linear extension of Q, so predecessors are settled first
    for x in r.lambda1.order:
        i = q.index[x]
        w[i] = 1 + sum(w[j] for j in iter_bits(q.down[i] & ~(1 << i)))
    return WeightFunction(dict(zip(p.elements, w)))


def complete_valuation(
    p: Poset,
    r: Realizer,
    checked: bool | None = None,
    limit: int | None = None,
) -> tuple[DownsetLattice, Valuation]:
    w = chain_count_weights(p, r)
    l = downset_lattice(p, limit)
    v = valuation_from_weights(l, w)
    if not is_bijective(l, v):
        raise AssertionError("chain-count valuation is not bijective")
    if checked is None:
        checked = len(l) <= CHECKED_MAX
    if checked:
        verdict = is_complete(l, v)
        if not verdict.ok:
            raise AssertionError(f"chain-count valuation is not complete: {verdict.witness}")
    return l, v


def successor(l: DownsetLattice, v: ValueTable, current: int, q: Poset | None = None) -> int:
    """Downset whose value is one more than ``current``'s, built directly.

    Take the minimal elements of the complementary upset (a chain of the
    complementary poset ``q``), add its least member ``y`` and drop every
    strict ``q``-predecessor of ``y``. ``q`` defaults to the complementary
    poset of the realizer extracted from ``v``.
    """
    values = _table(l, v)
    p = l.poset
    n = len(l)
    cur = values[l.ordinal(current)]
    if cur >= n - 1:
        raise AtTop("no successor of the top element")
    if q is None:
        q = complementary_poset(p, extract_realizer(l, values), "Q")
    upset = p.full & ~current
    minimal = [i for i in iter_bits(upset) if p.down[i] & upset == 1 << i]
    # minimal elements are pairwise P-incomparable, hence a chain in q
    for a in minimal:
        for b in minimal:
            if a != b and not (q.up[a] >> b & 1 or q.up[b] >> a & 1):
                log.warning("minimal elements %s, %s of the complement are not q-comparable",
                            p.elements[a], p.elements[b])
    chain_mask = _mask(minimal)
    y = next(i for i in minimal if q.down[i] & chain_mask == 1 << i)
    nxt = (current | 1 << y) & ~(q.down[y] & ~(1 << y))
    if nxt not in l.index or values[l.index[nxt]] != cur + 1:
        raise AssertionError(f"successor step from {{{l.label(current)}}} did not raise the value by one")
    return nxt


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def extract_realizer(l: DownsetLattice, v: ValueTable) -> Realizer:
    """Order elements by the values of their lower and upper cones."""
    values = _table(l, v)
    if not is_bijective(l, values) or not is_complete(l, values).ok:
        raise NotComplete("valuation is not complete")
    p = l.poset
    w = weights_from_valuation(l, values)
    dual = dual_valuation(l, w)
    down_val = {x: values[l.index[p.down[i]]] for i, x in enumerate(p.elements)}
    up_val = {x: dual.of_upset(p.up[i]) for i, x in enumerate(p.elements)}
    for cone in (down_val, up_val):
        if len(set(cone.values())) != len(cone):
            raise DuplicateConeValue("two elements share a cone value")
    lam_down = sorted(p.elements, key=down_val.__getitem__)
    lam_up = sorted(p.elements, key=lambda x: -up_val[x])
    if not is_realizer(p, lam_down, lam_up):
        raise AssertionError("extracted orders do not form a realizer")
    return Realizer(LinearExtension(tuple(lam_down)), LinearExtension(tuple(lam_up)))


def round_trip_check(p: Poset, r: Realizer, checked: bool | None = None) -> bool:
    """realizer -> valuation -> realizer, then valuation -> realizer -> valuation."""
    r = make_realizer(p, r.lambda1, r.lambda2)
    l, v = complete_valuation(p, r, checked)
    back = extract_realizer(l, v)
    if back != r:
        return False
    _, v2 = complete_valuation(p, back, checked=False)
    return v2.values == v.values
