"""JSON input files and TSV tables used by the command line."""
from __future__ import annotations

import json
from pathlib import Path

from .birkhoff import DownsetLattice, antichain_of
from .errors import LatvalError, UnknownElement
from .poset import Poset, Realizer, build_poset, make_realizer
from .valuation import Valuation, WeightFunction, omega_encode

TABLE_HEADER = ("downset", "antichain", "v", "v'", "omega")


class InputError(LatvalError):
    pass


def _load(path: str | Path) -> object:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def poset_from_json(data: object) -> Poset:
    if not isinstance(data, dict) or "elements" not in data:
        raise InputError('poset file needs {"elements": [...], "le": [[x, y], ...]}')
    elements = [str(x) for x in data["elements"]]
    for x in elements:
        if not x or any(c in x for c in ",\t\n"):
            raise InputError(f"element identifier {x!r} must be non-empty without commas or tabs")
    pairs = []
    for pair in data.get("le", []):
        if len(pair) != 2:
            raise InputError(f"relation entry {pair!r} is not a pair")
        pairs.append((str(pair[0]), str(pair[1])))
    return build_poset(elements, pairs)


def load_poset(path: str | Path) -> Poset:
    return poset_from_json(_load(path))


def load_realizer(path: str | Path, p: Poset) -> Realizer:
    data = _load(path)
    if not isinstance(data, dict) or "lambda1" not in data or "lambda2" not in data:
        raise InputError('realizer file needs {"lambda1": [...], "lambda2": [...]}')
    return make_realizer(p, [str(x) for x in data["lambda1"]], [str(x) for x in data["lambda2"]])


def weights_from_json(data: object) -> WeightFunction:
    if not isinstance(data, dict) or not isinstance(data.get("weights"), dict):
        raise InputError('valuation file needs {"weights": {element: n, ...}}')
    return WeightFunction({str(k): v for k, v in data["weights"].items()})


def parse_table(text: str, l: DownsetLattice) -> dict[int, int]:
    """Read the ``v`` column of a valuation table back into mask -> value."""
    lines = text.splitlines()
    if not lines or tuple(lines[0].split("\t"))[:3] != TABLE_HEADER[:3]:
        raise InputError("table must start with the header " + "\t".join(TABLE_HEADER))
    out = {}
    for line in lines[1:]:
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        names = [x for x in cols[0].split(",") if x]
        try:
            mask = l.mask(names)
        except UnknownElement as exc:
            raise InputError(f"unknown element {exc} in table") from None
        if mask not in l.index:
            raise InputError(f"row {cols[0]!r} is not a downset")
        out[mask] = int(cols[2])
    missing = len(l) - len(out)
    if missing:
        raise InputError(f"table is missing {missing} downsets")
    return out


def load_values(path: str | Path, l: DownsetLattice) -> dict[int, int] | WeightFunction:
    """A valuation file is either weights JSON or a table written by ``valuate``."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if text.lstrip().startswith("{"):
        try:
            return weights_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"cannot parse {path}: {exc}") from None
    return parse_table(text, l)


def valuation_table(l: DownsetLattice, v: Valuation, dual: Valuation, lambda1=None) -> str:
    rows = ["\t".join(TABLE_HEADER)]
    order = sorted(range(len(l)), key=lambda i: (v.values[i], i))
    for i in order:
        d = l.downsets[i]
        omega = "-" if lambda1 is None else str(omega_encode(l, d, lambda1))
        rows.append("\t".join((
            l.label(d),
            l.label(antichain_of(l, d).members),
            str(v.values[i]),
            str(dual.values[i]),
            omega,
        )))
    return "\n".join(rows) + "\n"


def dumps(data: object) -> str:
    return json.dumps(data, ensure_ascii=False) + "\n"
