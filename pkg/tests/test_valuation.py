import random

import pytest
from hypothesis import given, settings

from conftest import posets
from instances import random_poset
from latval import (
    antichain,
    build_poset,
    chain,
    check_valuation_axioms,
    delta,
    downset_lattice,
    dual_poset,
    dual_valuation,
    is_bijective,
    is_complete,
    join_set,
    lower_complete,
    meet_set,
    omega_encode,
    upper_complete,
    valuation_from_weights,
    weights_from_valuation,
)
from latval.errors import DomainMismatch, EmptyInput, NotAValuation, NotBijective
from latval.oracle import downsets_naive, search_bijective_valuations, valuation_is_complete_naive
from latval.poset import LinearExtension

N_WEIGHTS = {"a": 3, "b": 1, "c": 2, "d": 1}
N_TABLE = {"": 0, "b": 1, "bd": 2, "a": 3, "ab": 4, "abd": 5, "abc": 6, "abcd": 7}


def table(l, v):
    return {"".join(l.poset.names(d)): x for d, x in v.as_dict().items()}


def test_from_weights_two_antichain(two_antichain):
    l = downset_lattice(two_antichain)
    v = valuation_from_weights(l, {"a": 1, "b": 2})
    assert table(l, v) == {"": 0, "a": 1, "b": 2, "ab": 3}


def test_zero_weights(n_poset):
    l = downset_lattice(n_poset)
    assert set(valuation_from_weights(l, dict.fromkeys("abcd", 0)).values) == {0}


def test_from_weights_n_poset(n_poset):
    l = downset_lattice(n_poset)
    assert table(l, valuation_from_weights(l, N_WEIGHTS)) == N_TABLE


def test_domain_mismatch(n_poset):
    l = downset_lattice(n_poset)
    with pytest.raises(DomainMismatch):
        valuation_from_weights(l, {"a": 1})
    with pytest.raises(DomainMismatch):
        valuation_from_weights(l, {"a": 1, "b": 1, "c": 1, "d": -1})


def test_dual_valuation(n_poset):
    l = downset_lattice(n_poset)
    v = valuation_from_weights(l, N_WEIGHTS)
    dv = dual_valuation(l, N_WEIGHTS)
    p = l.poset
    assert dv.of_upset(p.full) == sum(N_WEIGHTS.values()) == v(p.full)
    cones = {x: dv.of_upset(p.up[p.index[x]]) for x in "abcd"}
    assert cones == {"a": 5, "b": 4, "c": 2, "d": 1}
    for s in l.downsets:
        assert v(s) + dv.of_upset(delta(l, s)) == v(p.full)


def test_axioms_pass_for_weights(n_poset):
    l = downset_lattice(n_poset)
    assert check_valuation_axioms(l, valuation_from_weights(l, N_WEIGHTS)).ok


def test_additivity_counterexample(two_antichain):
    l = downset_lattice(two_antichain)
    report = check_valuation_axioms(l, [0, 1, 1, 3])
    assert report.bottom_zero and report.monotone and not report.additive
    assert report.additive_witness == (l.mask("a"), l.mask("b"))


def test_bottom_zero_and_monotone(two_antichain):
    l = downset_lattice(two_antichain)
    assert not check_valuation_axioms(l, [1, 1, 1, 1]).bottom_zero
    report = check_valuation_axioms(l, [0, 2, 1, 1])
    assert not report.monotone
    assert report.monotone_witness == (l.mask("a"), l.mask("ab"))


@pytest.mark.parametrize("p, w, expected", [
    (antichain("ab"), (1, 2), True),
    (antichain("ab"), (1, 1), False),
    (antichain("abc"), (1, 2, 4), True),
    (chain("ab"), (1, 1), True),
])
def test_is_bijective(p, w, expected):
    l = downset_lattice(p)
    assert is_bijective(l, valuation_from_weights(l, dict(zip(p.elements, w)))) is expected


def test_join_meet_sets(two_antichain, n_poset):
    l = downset_lattice(two_antichain)
    a, b = l.mask("a"), l.mask("b")
    assert join_set(l, [0, a, b]) == {0, a, b, a | b}
    ch = [0, a, a | b]
    assert join_set(l, ch) == set(ch) == meet_set(l, ch)
    ln = downset_lattice(n_poset)
    t = [ln.mask("abcd"), ln.mask("abc"), ln.mask("abd")]
    assert meet_set(ln, t) == set(t) | {ln.mask("ab")}
    with pytest.raises(EmptyInput):
        join_set(l, [])


def test_complete_examples(n_poset, two_antichain):
    l = downset_lattice(n_poset)
    assert is_complete(l, valuation_from_weights(l, N_WEIGHTS)).ok
    l2 = downset_lattice(two_antichain)
    assert is_complete(l2, valuation_from_weights(l2, {"a": 2, "b": 1})).ok
    l1 = downset_lattice(chain("x"))
    assert is_complete(l1, [0, 1]).ok


def test_not_bijective_raises(two_antichain):
    l = downset_lattice(two_antichain)
    with pytest.raises(NotBijective):
        is_complete(l, valuation_from_weights(l, {"a": 1, "b": 1}))


def test_bijective_not_complete():
    # chain a<b<c beside an isolated d
    p = build_poset("abcd", [("a", "b"), ("b", "c")])
    l = downset_lattice(p)
    v = valuation_from_weights(l, {"a": 1, "b": 3, "c": 1, "d": 2})
    assert is_bijective(l, v)
    verdict = is_complete(l, v)
    assert not verdict.ok
    wit = verdict.witness
    assert (wit.side, wit.size, wit.values) == ("lower", 5, frozenset({0, 1, 2, 3, 4, 6}))
    assert {l.label(s) for s in wit.segment} == {"", "a", "d", "a,d", "a,b"}
    # the witness reproduces under recheck
    closed = join_set(l, wit.segment)
    assert {v(s) for s in closed} == wit.values


def test_omega(n_poset):
    l = downset_lattice(n_poset)
    lam = LinearExtension(tuple("bdac"))
    assert omega_encode(l, 0, lam) == 0
    assert omega_encode(l, l.mask("bd"), lam) == 3
    assert omega_encode(l, l.mask("abc"), lam) == 13
    assert omega_encode(l, l.poset.full, lam) == 15
    for j, x in enumerate(lam.order, start=1):
        assert omega_encode(l, l.mask(x), lam) == 2 ** (j - 1)


def test_weights_from_valuation(n_poset):
    l = downset_lattice(n_poset)
    assert weights_from_valuation(l, [0] * 8).weights == dict.fromkeys("abcd", 0)
    v = valuation_from_weights(l, N_WEIGHTS)
    assert weights_from_valuation(l, v).weights == N_WEIGHTS
    lc = downset_lattice(chain("ab"))
    assert weights_from_valuation(lc, [0, 1, 2]).weights == {"a": 1, "b": 1}
    with pytest.raises(NotAValuation):
        weights_from_valuation(downset_lattice(antichain("ab")), [0, 1, 1, 3])


@settings(max_examples=100, deadline=None)
@given(posets(max_k=6))
def test_weight_round_trip(p):
    rng = random.Random(len(p.pairs()))
    l = downset_lattice(p)
    w = {x: rng.randint(0, 5) for x in p.elements}
    v = valuation_from_weights(l, w)
    report = check_valuation_axioms(l, v)
    assert report.ok
    assert weights_from_valuation(l, v).weights == w
    assert valuation_from_weights(l, weights_from_valuation(l, v)) == v
    assert sum(w.values()) == v(p.full)


def bijective_cases(seed=7, count=60):
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        p = random_poset(rng, rng.randint(1, 5), rng.uniform(0, 0.6))
        for w in search_bijective_valuations(p)[:4]:
            cases.append((p, w))
    return cases


@pytest.mark.parametrize("p, w", bijective_cases())
def test_bijective_facts_and_dual_completeness(p, w):
    l = downset_lattice(p)
    v = valuation_from_weights(l, w)
    assert is_bijective(l, v)
    assert min(w.values()) >= 1
    assert v(p.full) == len(l) - 1
    # upper completeness on L is lower completeness of the same weights on the upset lattice
    ld = downset_lattice(dual_poset(p))
    vd = valuation_from_weights(ld, w)
    assert upper_complete(l, v).ok == lower_complete(ld, vd).ok
    assert lower_complete(l, v).ok == upper_complete(ld, vd).ok
    naive = downsets_naive(p)
    values = [sum(w[x] for x in d) for d in naive]
    assert is_complete(l, v).ok == valuation_is_complete_naive(naive, values)
