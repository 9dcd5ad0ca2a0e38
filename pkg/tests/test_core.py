import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinbranch.core import (
    MINUS_INFINITY,
    InvalidCharacteristic,
    InvalidReplace,
    SignedSet,
    Weight,
    check_characteristic,
    res_p,
    signed_measure,
)


def test_res_p_examples():
    assert res_p(16, 5) == 0
    assert res_p(0, 5) == 0
    assert res_p(-1, 5) == 2
    assert res_p(3, 0) == 6


@given(st.integers(-50, 50), st.sampled_from([0, 3, 5, 7, 11]))
def test_res_p_symmetry(j, p):
    assert res_p(j, p) == res_p(1 - j, p)


def test_characteristic_validation():
    for p in (0, 3, 5, 7, 11, 13):
        assert check_characteristic(p) == p
    for p in (1, 2, 4, 9, 15, -3):
        with pytest.raises(InvalidCharacteristic):
            check_characteristic(p)


def test_signed_measure_example():
    m = SignedSet.of(evens=[1, 5], odds=[3, 6, 7])
    assert m.ht() == 22
    assert m.parity() == 1
    assert m.min() == (1, False)
    assert m.max() == (7, True)
    assert signed_measure(m) == (22, 1, (1, False), (7, True))


def test_signed_measure_empty_and_singleton():
    empty = SignedSet.of()
    assert empty.ht() == MINUS_INFINITY
    assert empty.parity() == 0
    assert empty.min() is None
    single = SignedSet.of(odds=[2])
    assert single.ht() == 2
    assert single.parity() == 1
    assert single.min() == single.max() == (2, True)


def test_signed_transforms():
    a = SignedSet.of(evens=[2, 5], odds=[8])
    b = SignedSet.of(evens=[9], odds=[3])
    assert a.union(b) == SignedSet.of(evens=[2, 5, 9], odds=[3, 8])
    c = SignedSet.of(evens=[1, 5], odds=[4])
    assert c.replace((4, True), (3, True)) == SignedSet.of(evens=[1, 5], odds=[3])
    m = SignedSet.of(evens=[1, 3, 6], odds=[2, 5])
    assert m.restrict(range(2, 6)) == SignedSet.of(evens=[3], odds=[2, 5])
    assert SignedSet.of(evens=[3, 7, 8], odds=[4]).difference(
        SignedSet.of(evens=[8], odds=[4])
    ) == SignedSet.of(evens=[3, 7])


def test_signed_invariants_and_errors():
    with pytest.raises(ValueError):
        SignedSet.of(evens=[2], odds=[2])
    m = SignedSet.of(evens=[1])
    with pytest.raises(InvalidReplace):
        m.replace((2, False), (3, False))
    with pytest.raises(InvalidReplace):
        SignedSet.of(evens=[1, 3]).replace((1, False), (3, True))


signed_sets = st.builds(
    lambda evens, odds: SignedSet.of(evens - odds, odds - evens),
    st.frozensets(st.integers(-8, 8), max_size=6),
    st.frozensets(st.integers(-8, 8), max_size=6),
)


@given(signed_sets, st.frozensets(st.integers(-8, 8)))
def test_restrict_partitions_the_set(m, s):
    inside = m.restrict(s)
    outside = m.restrict(set(range(-9, 10)) - s)
    assert inside.union(outside) == m


@given(signed_sets, signed_sets)
def test_parity_additive_on_disjoint(a, b):
    if a.support() & b.support():
        return
    assert a.union(b).parity() == (a.parity() + b.parity()) % 2


def test_json_round_trips():
    m = SignedSet.of(evens=[2, 5], odds=[3])
    assert SignedSet.from_json(m.to_json()) == m
    assert json.loads(m.to_json()) == {"even": [2, 5], "odd": [3]}
    w = Weight((3, 1, -2), 5)
    assert Weight.from_json(w.to_json()) == w
    assert json.loads(w.to_json()) == {"p": 5, "parts": [3, 1, -2]}


def test_weight_basics():
    w = Weight((4, 4, 1), 0)
    assert not w.is_p_strict()  # equal entries need p | value
    assert Weight((5, 5, 1), 5).is_p_strict()
    assert Weight((3, 1), 5).minus_w0() == Weight((-1, -3), 5)
    with pytest.raises(ValueError):
        Weight((), 5)
