"""Graphviz DOT text for Hasse diagrams of P, its complement Q, or the lattice."""
from __future__ import annotations

from typing import Mapping

from .birkhoff import DownsetLattice
from .poset import Poset, iter_bits


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_dot(p: Poset, name: str = "P", weights: Mapping[str, int] | None = None) -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x in p.elements:
        label = x if weights is None else f"{x} w={weights[x]}"
        lines.append(f"  {_quote(x)} [label={_quote(label)}];")
    for x, y in p.covers():
        lines.append(f"  {_quote(x)} -> {_quote(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_dot(l: DownsetLattice, values=None) -> str:
    """Cover graph of the downset lattice; nodes optionally carry valuation values."""
    p = l.poset
    lines = ["digraph L {", "  rankdir=BT;"]
    for i, d in enumerate(l.downsets):
        label = "{" + l.label(d) + "}"
        if values is not None:
            label += f" v={values[i]}"
        lines.append(f"  n{i} [label={_quote(label)}];")
    for i, d in enumerate(l.downsets):
        for x in iter_bits(p.full & ~d):
            t = d | 1 << x
            if t in l.index:
                lines.append(f"  n{i} -> n{l.index[t]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
