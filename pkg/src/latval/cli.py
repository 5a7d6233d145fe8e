"""Command line front end.

Exit status: 0 on success or a positive verdict, 1 on a negative verdict
(no realizer, not complete, empty search), 2 on input errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import oracle
from .birkhoff import DownsetLattice, downset_lattice
from .dot import lattice_dot, poset_dot
from .errors import LatvalError, NotComplete
from .files import dumps, load_poset, load_realizer, load_values, valuation_table
from .limits import default_limit
from .poset import Poset, complementary_poset
from .realizer import (
    chain_count_weights,
    complete_valuation,
    extract_realizer,
    find_realizer,
    iter_realizers,
    round_trip_check,
)
from .valuation import (
    WeightFunction,
    check_valuation_axioms,
    describe_axiom_failure,
    dual_valuation,
    is_bijective,
    is_complete,
    valuation_from_weights,
    weights_from_valuation,
)

OK, FALSE, INPUT_ERROR = 0, 1, 2


class UsageError(LatvalError):
    pass


def _need(args, flag: str):
    value = getattr(args, flag)
    if value is None:
        raise UsageError(f"this command needs -{flag[0]} FILE")
    return value


def _lattice(args, p: Poset) -> DownsetLattice:
    return downset_lattice(p, args.limit)


def _valuation_input(args, p: Poset, l: DownsetLattice):
    """Weights and value table from -r (chain counts) or -v (file)."""
    if args.r is not None:
        r = load_realizer(args.r, p)
        w = chain_count_weights(p, r)
        return w, valuation_from_weights(l, w).values, r
    raw = load_values(_need(args, "v"), l)
    if isinstance(raw, WeightFunction):
        return raw, valuation_from_weights(l, raw).values, None
    values = [raw[d] for d in l.downsets]
    report = check_valuation_axioms(l, values)
    w = weights_from_valuation(l, values) if report.ok else None
    return w, values, None


def cmd_lattice(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    l = _lattice(args, p)
    if args.stats:
        antichains = sum(1 for d in l.downsets if p.is_antichain(_maximal(p, d)))
        out.append(f"elements={len(p)} downsets={len(l)} antichains={antichains}\n")
        return OK
    rows = ["downset\tantichain"]
    for d in l.downsets:
        rows.append(f"{l.label(d)}\t{l.label(_maximal(p, d))}")
    out.append("\n".join(rows) + "\n")
    return OK


def _maximal(p: Poset, d: int) -> int:
    return sum(1 << i for i in range(len(p)) if d >> i & 1 and p.up[i] & d == 1 << i)


def cmd_dim2(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    r = find_realizer(p, args.limit)
    if r is None:
        out.append("no realizer: dimension ≥ 3\n")
        return FALSE
    out.append(dumps(r.to_json()))
    return OK


def cmd_weights(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    r = load_realizer(_need(args, "r"), p)
    out.append(dumps(chain_count_weights(p, r).to_json(p.elements)))
    return OK


def cmd_valuate(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    if args.r is not None:
        r = load_realizer(args.r, p)
        l, v = complete_valuation(p, r, checked=False if args.unchecked else None, limit=args.limit)
        w = chain_count_weights(p, r)
        lambda1 = r.lambda1
    else:
        l = _lattice(args, p)
        w, values, _ = _valuation_input(args, p, l)
        if w is None:
            raise UsageError("valuation file does not describe a valuation")
        v = valuation_from_weights(l, w)
        lambda1 = None
        if is_bijective(l, v) and is_complete(l, v).ok:
            lambda1 = extract_realizer(l, v).lambda1
    out.append(valuation_table(l, v, dual_valuation(l, w), lambda1))
    return OK


def cmd_check(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    l = _lattice(args, p)
    _, values, _ = _valuation_input(args, p, l)
    report = check_valuation_axioms(l, values)
    out.append(f"valuation: {describe_axiom_failure(l, report)}\n")
    if not report.ok:
        out.append("verdict: not a valuation\n")
        return FALSE
    bij = is_bijective(l, values)
    out.append(f"bijective: {str(bij).lower()}\n")
    if not bij:
        out.append("verdict: not bijective\n")
        return FALSE
    verdict = is_complete(l, values)
    out.append(f"complete: {str(verdict.ok).lower()}\n")
    if not verdict.ok:
        wit = verdict.witness
        out.append(f"witness: {wit.side} segment of size {wit.size} closes to values {sorted(wit.values)}\n")
        out.append("verdict: bijective, not complete\n")
        return FALSE
    out.append("verdict: complete\n")
    return OK


def cmd_extract(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    l = _lattice(args, p)
    _, values, _ = _valuation_input(args, p, l)
    try:
        r = extract_realizer(l, values)
    except NotComplete as exc:
        out.append(f"no realizer: {exc}\n")
        return FALSE
    out.append(dumps(r.to_json()))
    return OK


def cmd_roundtrip(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    checked = False if args.unchecked else None
    if args.r is not None:
        realizers = [load_realizer(args.r, p)]
    else:
        realizers = list(iter_realizers(p, args.limit))
        if not realizers:
            out.append("no realizer: dimension ≥ 3\n")
            return FALSE
    status = OK
    for r in realizers:
        ok = round_trip_check(p, r, checked)
        out.append(f"{','.join(r.lambda1.order)}\t{','.join(r.lambda2.order)}\t{str(ok).lower()}\n")
        if not ok:
            status = FALSE
    return status


def cmd_search(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    search = {
        "bijective": oracle.search_bijective_valuations,
        "complete": oracle.search_complete_valuations,
    }[args.mode]
    found = search(p, args.limit)
    rows = ["\t".join(p.elements)]
    rows += ["\t".join(str(w[x]) for x in p.elements) for w in found]
    rows.append(f"# mode={args.mode} candidates={oracle.count_candidates(p)} found={len(found)}")
    out.append("\n".join(rows) + "\n")
    return OK if found else FALSE


def cmd_export_dot(args, out: list[str]) -> int:
    p = load_poset(_need(args, "i"))
    if args.target == "complement":
        r = load_realizer(_need(args, "r"), p)
        q = complementary_poset(p, r, "Q")
        out.append(poset_dot(q, "Q", chain_count_weights(p, r).weights))
        return OK
    needs_values = args.r is not None or args.v is not None
    l = _lattice(args, p) if needs_values or args.target == "lattice" else None
    w = values = None
    if needs_values:
        w, values, _ = _valuation_input(args, p, l)
    if args.target == "poset":
        out.append(poset_dot(p, "P", None if w is None else w.weights))
    else:
        out.append(lattice_dot(l, values))
    return OK


COMMANDS = {
    "lattice": cmd_lattice,
    "dim2": cmd_dim2,
    "weights": cmd_weights,
    "valuate": cmd_valuate,
    "check": cmd_check,
    "extract-realizer": cmd_extract,
    "roundtrip": cmd_roundtrip,
    "search": cmd_search,
    "export-dot": cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latval",
        description="Complete valuations on downset lattices and realizers of 2-dimensional posets.",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("-i", metavar="FILE", help="poset JSON file")
    parser.add_argument("-r", metavar="FILE", help="realizer JSON file")
    parser.add_argument("-v", metavar="FILE", help="weights JSON or valuation table")
    parser.add_argument("-o", metavar="FILE", help="write output here instead of stdout")
    parser.add_argument("--limit", type=int, default=None,
                        help="size bound for lattices and searches (default: LATVAL_LIMIT or 1000000)")
    parser.add_argument("--unchecked", action="store_true", help="skip completeness verification")
    parser.add_argument("--stats", action="store_true", help="lattice: print counts only")
    parser.add_argument("--mode", choices=("bijective", "complete"), default="complete")
    parser.add_argument("--target", choices=("poset", "complement", "lattice"), default="poset")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if args.limit is None:
        args.limit = default_limit()
    out: list[str] = []
    try:
        status = COMMANDS[args.command](args, out)
    except LatvalError as exc:
        print(f"latval: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except ValueError as exc:
        print(f"latval: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INPUT_ERROR
    text = "".join(out)
    if args.o:
        with open(args.o, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", newline="\n")
    sys.exit(run())


if __name__ == "__main__":
    main()
