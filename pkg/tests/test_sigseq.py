import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinbranch.core import Weight
from spinbranch.sigseq import (
    MINUS,
    PLUS,
    Flow,
    MarkOutOfRange,
    NotAllMinus,
    PreconditionFailed,
    SignMap,
    build_full_flow,
    flow_analyze,
    lead_plus_index,
    minus_count,
    minus_w0_seq,
    partial_flow,
    plus_count,
    product_of,
    r_beta,
    reduce_random_order,
    reduce_seq,
    reduced_product,
    resolution_of,
    section_of,
    seq_from_json,
    seq_to_json,
    signs,
    split_index,
)

M, P = MINUS, PLUS


def mk(text: str):
    """'-+-' -> marked sequence with positional marks."""
    return tuple((P if ch == "+" else M, k + 1) for k, ch in enumerate(text))


def test_reduce_examples():
    assert reduce_seq(mk("-+")) == ()
    # survivors keep their original marks and order
    assert reduce_seq(mk("---++--")) == ((M, 1), (M, 6), (M, 7))
    assert reduce_seq(mk("+-")) == mk("+-")


def test_product_of_examples():
    u = SignMap.make("pair", {1: "--", 2: "+-"})
    assert product_of(u, {1, 2}) == ((M, 1), (M, 1), (P, 2), (M, 2))
    assert product_of(u, {2}) == ((P, 2), (M, 2))
    v = SignMap.make("single", {1: "", 2: "+"})
    assert product_of(v, {1, 2}) == ((P, 2),)


def test_r_beta_examples():
    lam = Weight((16, 11, 10, 10, 9, 5, 1, 0), 5)
    u = r_beta(lam, 0)
    assert u.mode == "pair"
    assert [v for _, v in u.values] == ["--", "--", "+-", "+-", "++", "+-", "--", "+-"]
    v = r_beta(Weight((2, 1), 5), 2)
    assert v.mode == "single"
    assert [x for _, x in v.values] == ["-", "+"]
    assert [x for _, x in r_beta(Weight((3,), 5), 1).values] == ["-"]


def test_minus_w0_examples():
    assert minus_w0_seq(((M, 1), (M, 2)), 2) == ((P, 1), (P, 2))
    assert minus_w0_seq((), 2) == ()
    assert minus_w0_seq(((M, 1), (P, 2)), 2) == ((M, 1), (P, 2))
    with pytest.raises(MarkOutOfRange):
        minus_w0_seq(((M, 3),), 2)


def test_flow_analyze_examples():
    u = SignMap.make("single", {1: "-", 2: "+"})
    rep = flow_analyze(Flow(frozenset({(1, 2)})), u)
    assert rep.is_flow and rep.coherent and rep.fully_coherent and not rep.buds

    u2 = SignMap.make("pair", {1: "+-"})
    rep2 = flow_analyze(Flow(frozenset({(1, 1)})), u2)
    assert rep2.is_weak_flow and not rep2.is_flow

    u3 = SignMap.make("single", {1: "-"})
    rep3 = flow_analyze(Flow(frozenset()), u3)
    assert rep3.is_flow and rep3.coherent and rep3.fully_coherent
    assert rep3.buds == frozenset({1})


def test_build_full_flow_examples():
    u = SignMap.make("single", {1: "-", 2: "+"})
    assert build_full_flow(u).edges == frozenset({(1, 2)})

    v = SignMap.make("pair", {1: "--"})
    g = build_full_flow(v)
    assert g.edges == frozenset()
    assert flow_analyze(g, v).buds == frozenset({1})

    w = SignMap.make("pair", {1: "--", 2: "++"})
    g2 = build_full_flow(w)
    assert g2.edges == frozenset({(1, 2)})
    assert not flow_analyze(g2, w).buds

    with pytest.raises(NotAllMinus):
        build_full_flow(SignMap.make("single", {1: "+"}))


def test_split_index_examples():
    assert split_index(SignMap.make("pair", {1: "--"})) == 1
    assert split_index(SignMap.make("pair", {1: "--", 2: "+-"})) == 1
    with pytest.raises(PreconditionFailed):
        split_index(SignMap.make("pair", {1: "+-", 2: "--"}))


def test_lead_plus_examples():
    assert lead_plus_index(SignMap.make("pair", {1: "+-"})) == 1
    assert lead_plus_index(SignMap.make("pair", {1: "--", 2: "++", 3: "+-"})) == 3
    assert lead_plus_index(SignMap.make("pair", {1: "+-", 2: "--"})) == 1


def test_section_examples():
    assert section_of(SignMap.make("pair", {1: "+-"})) == (1,)
    assert section_of(SignMap.make("pair", {1: "+-", 2: "+-"})) == (1, 2)
    assert section_of(SignMap.make("pair", {1: "--", 2: "++", 3: "+-"})) == (3,)


def test_resolution_examples():
    assert resolution_of(SignMap.make("pair", {1: "+-"})).edges == frozenset({(1, 1)})
    assert resolution_of(
        SignMap.make("pair", {1: "--", 2: "++", 3: "+-"})
    ).edges == frozenset({(1, 2), (3, 3)})
    assert resolution_of(
        SignMap.make("pair", {1: "+-", 2: "--", 3: "++"})
    ).edges == frozenset({(1, 1), (2, 3)})


def test_partial_flow_examples():
    j, g = partial_flow(SignMap.make("single", {1: "+"}))
    assert j == (1,) and g.edges == frozenset()
    j2, g2 = partial_flow(SignMap.make("pair", {1: "++"}))
    assert j2 == (1,) and g2.edges == frozenset()
    u = SignMap.make("pair", {1: "--", 2: "++", 3: "++"})
    j3, g3 = partial_flow(u)
    assert j3 == (1, 2, 3)
    rep = flow_analyze(g3, u)
    assert rep.is_flow and rep.coherent and not rep.fully_coherent and not rep.buds
    with pytest.raises(PreconditionFailed):
        partial_flow(SignMap.make("single", {1: "-"}))


marked = st.lists(
    st.tuples(st.sampled_from([P, M]), st.integers(0, 9)), max_size=18
).map(tuple)


@given(marked)
def test_reduce_idempotent_and_shape(u):
    red = reduce_seq(u)
    assert reduce_seq(red) == red
    s, r = plus_count(red), minus_count(red)
    assert signs(red) == "+" * s + "-" * r
    assert s - r == plus_count(u) - minus_count(u)


@given(marked, marked)
def test_reduce_is_a_congruence(u, v):
    assert reduce_seq(u + v) == reduce_seq(reduce_seq(u) + v)
    assert reduce_seq(u + v) == reduce_seq(u + reduce_seq(v))


@given(marked, st.integers(0, 2**32))
@settings(max_examples=60)
def test_reduce_order_independent(u, seed):
    rng = random.Random(seed)
    assert reduce_random_order(u, rng) == reduce_seq(u)


@given(
    st.dictionaries(st.integers(1, 8), st.sampled_from(["", "--", "+-", "++"]), max_size=8)
)
def test_pair_mode_parity(values):
    u = SignMap.make("pair", values)
    red = reduced_product(u)
    assert (plus_count(red) - minus_count(red)) % 2 == 0


@given(marked.filter(lambda u: all(1 <= m <= 9 for _, m in u)))
def test_minus_w0_commutes_with_reduction(u):
    n = 9
    assert reduce_seq(minus_w0_seq(u, n)) == minus_w0_seq(reduce_seq(u), n)


def test_json_round_trips():
    u = ((M, 1), (P, 2))
    assert seq_from_json(seq_to_json(u)) == u
    assert json.loads(seq_to_json(u)) == [["-", 1], ["+", 2]]
    sm = SignMap.make("pair", {1: "--", 2: "+-"})
    assert SignMap.from_json(sm.to_json()) == sm
    assert json.loads(sm.to_json()) == {"mode": "pair", "values": {"1": "--", "2": "+-"}}
    fl = Flow(frozenset({(1, 2), (3, 3)}))
    assert Flow.from_json(fl.to_json()) == fl


def test_mode_mixing_is_an_error():
    with pytest.raises(ValueError):
        SignMap.make("single", {1: "--"})
    with pytest.raises(ValueError):
        SignMap.make("pair", {1: "-"})
    with pytest.raises(ValueError):
        SignMap.make("triple", {1: "-"})
