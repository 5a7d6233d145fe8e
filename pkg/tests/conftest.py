import pytest
from hypothesis import strategies as st

from latval import antichain, build_poset, chain, make_realizer, standard_example


@pytest.fixture
def n_poset():
    return build_poset("abcd", [("a", "c"), ("b", "c"), ("b", "d")])


@pytest.fixture
def n_realizer(n_poset):
    return make_realizer(n_poset, "bdac", "abcd")


@pytest.fixture
def s3():
    return standard_example(3)


@pytest.fixture
def two_antichain():
    return antichain("ab")


@pytest.fixture
def two_chain():
    return chain("ab")


@st.composite
def posets(draw, max_k=6):
    k = draw(st.integers(0, max_k))
    names = [f"e{i}" for i in range(k)]
    hidden = draw(st.permutations(names))
    pairs = [
        (hidden[i], hidden[j])
        for i in range(k)
        for j in range(i + 1, k)
        if draw(st.booleans())
    ]
    return build_poset(names, pairs)
