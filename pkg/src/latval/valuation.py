"""Weight functions, valuations, their axioms, and segment completeness."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .birkhoff import DownsetLattice
from .errors import DomainMismatch, EmptyInput, NotAValuation, NotBijective, UnknownDownset
from .poset import LinearExtension, iter_bits


@dataclass(frozen=True)
class WeightFunction:
    weights: Mapping[str, int]

    def __getitem__(self, x: str) -> int:
        return self.weights[x]

    def total(self) -> int:
        return sum(self.weights.values())

    def as_tuple(self, elements: Sequence[str]) -> tuple[int, ...]:
        return tuple(self.weights[x] for x in elements)

    def to_json(self, elements: Sequence[str] | None = None) -> dict:
        keys = elements if elements is not None else list(self.weights)
        return {"weights": {x: self.weights[x] for x in keys}}


@dataclass(frozen=True)
class Valuation:
    """Values indexed by lattice ordinal.

    With ``upper=True`` the entry at ordinal ``i`` is the dual value of the
    upset complementary to ``lattice.downsets[i]``.
    """

    lattice: DownsetLattice
    values: tuple[int, ...]
    upper: bool = False

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, downset: int) -> int:
        return self.values[self.lattice.ordinal(downset)]

    def of_upset(self, upset: int) -> int:
        """Dual value of an upset; only meaningful when ``upper`` is set."""
        return self.values[self.lattice.ordinal(self.lattice.poset.full & ~upset)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.lattice.downsets, self.values))


ValueTable = Union[Valuation, Sequence[int], Mapping[int, int]]


def _table(l: DownsetLattice, v: ValueTable) -> list[int]:
    """Per-ordinal value list from any accepted value representation."""
    if isinstance(v, Valuation):
        if v.lattice is not l and v.lattice.downsets != l.downsets:
            raise DomainMismatch("valuation belongs to a different lattice")
        return list(v.values)
    if isinstance(v, Mapping):
        if set(v) != set(l.downsets):
            raise DomainMismatch("value mapping must cover exactly the lattice's downsets")
        return [v[d] for d in l.downsets]
    out = list(v)
    if len(out) != len(l):
        raise DomainMismatch(f"expected {len(l)} values, got {len(out)}")
    return out


def _weight_list(l: DownsetLattice, w: WeightFunction | Mapping[str, int]) -> list[int]:
    weights = w.weights if isinstance(w, WeightFunction) else w
    elements = l.poset.elements
    if set(weights) != set(elements):
        raise DomainMismatch("weights must be defined on exactly the poset's elements")
    out = [weights[x] for x in elements]
    if any(not isinstance(x, int) or x < 0 for x in out):
        raise DomainMismatch("weights must be natural numbers")
    return out


def _mask_sum(weights: list[int], mask: int) -> int:
    return sum(weights[i] for i in iter_bits(mask))


def valuation_from_weights(l: DownsetLattice, w: WeightFunction | Mapping[str, int]) -> Valuation:
    weights = _weight_list(l, w)
    return Valuation(l, tuple(_mask_sum(weights, d) for d in l.downsets))


def dual_valuation(l: DownsetLattice, w: WeightFunction | Mapping[str, int]) -> Valuation:
    weights = _weight_list(l, w)
    full = l.poset.full
    return Valuation(l, tuple(_mask_sum(weights, full & ~d) for d in l.downsets), upper=True)


@dataclass(frozen=True)
class AxiomReport:
    bottom_zero: bool
    monotone: bool
    additive: bool
    monotone_witness: tuple[int, int] | None = None
    additive_witness: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.bottom_zero and self.monotone and self.additive


def check_valuation_axioms(l: DownsetLattice, v: ValueTable) -> AxiomReport:
    """Check v(bottom)=0, monotonicity and additivity over every pair.

    Monotonicity is checked on covering pairs, which implies it for all
    comparable pairs; the witness is then a covering pair.
    """
    values = _table(l, v)
    index = l.index
    bottom_zero = values[l.bottom] == 0

    mono_witness = None
    for d in l.downsets:
        for i in iter_bits(l.poset.full & ~d):
            t = d | 1 << i
            if t in index and values[index[d]] > values[index[t]]:
                mono_witness = (d, t)
                break
        if mono_witness:
            break

    add_witness = None
    downsets = l.downsets
    for a, s in enumerate(downsets):
        vs = values[a]
        for b in range(a + 1, len(downsets)):
            t = downsets[b]
            if values[index[s | t]] + values[index[s & t]] != vs + values[b]:
                add_witness = (s, t)
                break
        if add_witness:
            break
    return AxiomReport(bottom_zero, mono_witness is None, add_witness is None, mono_witness, add_witness)


def is_bijective(l: DownsetLattice, v: ValueTable) -> bool:
    return sorted(_table(l, v)) == list(range(len(l)))


def _closure(l: DownsetLattice, t: Iterable[int], op) -> set[int]:
    items = list(t)
    if not items:
        raise EmptyInput("join/meet set of an empty collection")
    for m in items:
        if m not in l.index:
            raise UnknownDownset(f"{l.poset.names(m)!r} is not in the lattice")
    out: set[int] = set()
    for m in items:
        if m not in out:
            out |= {op(m, s) for s in out}
            out.add(m)
    return out


def join_set(l: DownsetLattice, t: Iterable[int]) -> set[int]:
    """All joins of nonempty subfamilies of ``t``."""
    return _closure(l, t, int.__or__)


def meet_set(l: DownsetLattice, t: Iterable[int]) -> set[int]:
    return _closure(l, t, int.__and__)


@dataclass(frozen=True)
class SegmentWitness:
    side: str  # "lower" or "upper"
    size: int  # number of lattice elements in the failing segment
    segment: frozenset[int]
    values: frozenset[int]


@dataclass(frozen=True)
class SegmentVerdict:
    ok: bool
    witness: SegmentWitness | None = None


def _lower_failure(l: DownsetLattice, values: list[int]) -> SegmentWitness | None:
    # Join closures grow with the segment: J(T + a) = J(T) + {a} + {a | s : s in J(T)}.
    by_value = sorted(range(len(l)), key=values.__getitem__)
    index = l.index
    closed: set[int] = set()
    top_value = 0
    for size, o in enumerate(by_value, start=1):
        m = l.downsets[o]
        if m not in closed:
            new = {m | s for s in closed}
            new.add(m)
            closed |= new
            top_value = max(top_value, max(values[index[s]] for s in new))
        if top_value != len(closed) - 1:
            segment = frozenset(l.downsets[x] for x in by_value[:size])
            return SegmentWitness("lower", size, segment, frozenset(values[index[s]] for s in closed))
    return None


def _upper_failure(l: DownsetLattice, values: list[int]) -> SegmentWitness | None:
    n = len(l)
    by_value = sorted(range(n), key=values.__getitem__, reverse=True)
    index = l.index
    closed: set[int] = set()
    low_value = n - 1
    for size, o in enumerate(by_value, start=1):
        m = l.downsets[o]
        if m not in closed:
            new = {m & s for s in closed}
            new.add(m)
            closed |= new
            low_value = min(low_value, min(values[index[s]] for s in new))
        if low_value != n - len(closed):
            segment = frozenset(l.downsets[x] for x in by_value[:size])
            return SegmentWitness("upper", size, segment, frozenset(values[index[s]] for s in closed))
    return None


def _bijective_table(l: DownsetLattice, v: ValueTable) -> list[int]:
    values = _table(l, v)
    if sorted(values) != list(range(len(l))):
        raise NotBijective("completeness is only defined for bijective valuations")
    return values


def lower_complete(l: DownsetLattice, v: ValueTable) -> SegmentVerdict:
    w = _lower_failure(l, _bijective_table(l, v))
    return SegmentVerdict(w is None, w)


def upper_complete(l: DownsetLattice, v: ValueTable) -> SegmentVerdict:
    w = _upper_failure(l, _bijective_table(l, v))
    return SegmentVerdict(w is None, w)


def is_complete(l: DownsetLattice, v: ValueTable) -> SegmentVerdict:
    """Check both completeness conditions on every value prefix and suffix.

    The first failing lower segment (smallest first) is reported before any
    upper one.
    """
    values = _bijective_table(l, v)
    w = _lower_failure(l, values) or _upper_failure(l, values)
    return SegmentVerdict(w is None, w)


def omega_encode(l: DownsetLattice, downset: int, lambda1: LinearExtension) -> int:
    """Bit ``j-1`` is set iff the element at lambda1 position ``j`` is in the downset."""
    index = l.poset.index
    code = 0
    for j, x in enumerate(lambda1.order):
        if downset >> index[x] & 1:
            code |= 1 << j
    return code


def weights_from_valuation(l: DownsetLattice, v: ValueTable) -> WeightFunction:
    report = check_valuation_axioms(l, v)
    if not report.ok:
        raise NotAValuation(_describe(l, report))
    values = _table(l, v)
    p = l.poset
    weights = {}
    for i, x in enumerate(p.elements):
        cone = p.down[i]
        weights[x] = values[l.index[cone]] - values[l.index[cone & ~(1 << i)]]
    return WeightFunction(weights)


def _describe(l: DownsetLattice, report: AxiomReport) -> str:
    if not report.bottom_zero:
        return "value of the bottom element is not 0"
    if not report.monotone:
        s, t = report.monotone_witness
        return f"monotonicity fails on {{{l.label(s)}}} <= {{{l.label(t)}}}"
    s, t = report.additive_witness
    return f"additivity fails on ({{{l.label(s)}}}, {{{l.label(t)}}})"


def describe_axiom_failure(l: DownsetLattice, report: AxiomReport) -> str:
    return "ok" if report.ok else _describe(l, report)
