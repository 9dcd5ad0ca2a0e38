import random

import pytest

from spinbranch.core import Weight
from spinbranch.crystal import (
    CrystalGraph,
    NotDominantPStrict,
    NotRestricted,
    PStrictPartition,
    beta_of_content,
    beta_signature,
    body_nodes,
    body_signed_nodes,
    branching_tables,
    cogood_nodes,
    conormal_nodes,
    cont_p,
    contents_for,
    crystal_graph,
    e_tilde,
    f_tilde,
    good_nodes,
    rim_nodes,
    rim_signature,
    normal_nodes,
    partitions_of,
    restricted_partitions,
    spin_stats,
)
from spinbranch.sigseq import MINUS, PLUS, product_of, r_beta, reduce_seq

WORKED = PStrictPartition((16, 11, 10, 10, 9, 5, 1), 5)


def test_cont_p_examples():
    assert cont_p(16, 5) == 0
    assert cont_p(3, 5) == 2
    assert [cont_p(c, 5) for c in range(1, 11)] == [0, 1, 2, 1, 0, 0, 1, 2, 1, 0]
    assert all(cont_p(k, 0) == k - 1 for k in range(1, 9))


def test_content_residue_dictionary():
    for p in (3, 5, 7, 11):
        for s in range(1, 40):
            assert beta_of_content(cont_p(s, p), p) == (s * (s - 1)) % p


def test_rim_nodes_worked_example():
    rem, add = rim_nodes(WORKED, 0)
    assert rem == [(1, 16), (1, 15), (2, 11), (6, 5), (7, 1)]
    assert add == [(5, 10), (6, 6)]


def test_rim_nodes_small():
    empty = PStrictPartition((), 5)
    assert rim_nodes(empty, 0) == ([], [(1, 1)])
    assert rim_nodes(empty, 1) == ([], [])
    # (2,1) is not addable to (1): the result (1,1) fails p-strictness
    one = PStrictPartition((1,), 5)
    assert rim_nodes(one, 0) == ([(1, 1)], [])
    assert rim_nodes(PStrictPartition((2,), 5), 1) == ([(1, 2)], [])
    assert rim_nodes(PStrictPartition((5,), 5), 0) == ([(1, 5)], [(1, 6), (2, 1)])


def test_rim_signature_worked_example():
    assert rim_signature(WORKED, 0) == (
        (MINUS, 1), (MINUS, 1), (MINUS, 2), (PLUS, 5), (PLUS, 6), (MINUS, 6), (MINUS, 7),
    )
    assert rim_signature(WORKED, 0, reduced=True) == ((MINUS, 1), (MINUS, 6), (MINUS, 7))


def test_rim_signature_p3():
    # contents for p=3 are 0,1,0 repeating; both columns 3 and 4 carry 0
    lam = PStrictPartition((2,), 3)
    assert rim_signature(lam, 0) == ((PLUS, 1), (PLUS, 1), (PLUS, 2))
    assert rim_signature(lam, 0, reduced=True) == ((PLUS, 1), (PLUS, 1), (PLUS, 2))
    assert rim_signature(lam, 1, reduced=True) == ((MINUS, 1),)


def test_e_tilde_examples():
    assert e_tilde(0, WORKED).parts == (15, 11, 10, 10, 9, 5, 1)
    assert e_tilde(0, PStrictPartition((), 5)) is None
    assert e_tilde(1, PStrictPartition((2,), 3)).parts == (1,)


def test_f_tilde_examples():
    assert f_tilde(0, PStrictPartition((), 3)).parts == (1,)
    assert f_tilde(1, PStrictPartition((1,), 3)).parts == (2,)
    assert f_tilde(0, WORKED) is None
    assert conormal_nodes(WORKED, 0) == [] and cogood_nodes(WORKED, 0) == []


def test_body_nodes_examples():
    rem, add = body_nodes(Weight((1, 0), 5), 0)
    assert rem == [(1, 1), (2, 0)] and add == []
    rem2, add2 = body_nodes(Weight((0,), 5), 0)
    assert rem2 == [(1, 0)] and add2 == [(1, 1)]
    padded = Weight(WORKED.parts + (0,), 5)
    row8 = [(s, nd) for s, nd in body_signed_nodes(padded, 0) if nd[0] == 8]
    assert row8 == [(MINUS, (8, 0))]
    with pytest.raises(NotDominantPStrict):
        body_nodes(Weight((1, 2), 5), 0)


def test_beta_signature_examples():
    assert beta_signature(Weight((1, 0), 5), 0, reduced=True) == ((MINUS, 1), (MINUS, 2))
    assert beta_signature(Weight((0,), 5), 0) == ((PLUS, 1), (MINUS, 1))
    padded = Weight(WORKED.parts + (0,), 5)
    assert beta_signature(padded, 0, reduced=True) == (
        (MINUS, 1), (MINUS, 6), (MINUS, 7), (MINUS, 8),
    )


def test_signature_bridge_small_sweep():
    rng = random.Random(5)
    for _ in range(300):
        p = rng.choice([3, 5, 7])
        n = rng.randint(1, 5)
        while True:
            parts = tuple(sorted((rng.randint(0, 9) for _ in range(n)), reverse=True))
            lam = Weight(parts, p)
            if lam.is_p_strict():
                break
        for beta in range(p):
            assert beta_signature(lam, beta, reduced=True) == reduce_seq(
                product_of(r_beta(lam, beta))
            )


def test_signature_bridge_characteristic_zero():
    # strict weights at p = 0: residues live in Z but the bridge still holds
    rng = random.Random(17)
    seen = 0
    while seen < 150:
        n = rng.randint(1, 5)
        parts = tuple(sorted((rng.randint(0, 9) for _ in range(n)), reverse=True))
        w = Weight(parts, 0)
        if not w.is_p_strict():
            continue
        seen += 1
        betas = {w.residue(i) for i in range(1, n + 1)} | {0, 2, 6}
        for beta in betas:
            assert beta_signature(w, beta, reduced=True) == reduce_seq(
                product_of(r_beta(w, beta))
            )


def test_dictionary_padding():
    # reduced rim signature plus one trailing minus at the padded row agrees
    # with the reduced beta signature exactly at content 0; elsewhere they match
    for p in (3, 5):
        for n in range(0, 10):
            for parts in partitions_of(n):
                try:
                    lam = PStrictPartition(parts, p)
                except ValueError:
                    continue
                w = lam.pad_weight()
                for i in contents_for(p, max([1] + [v + 2 for v in parts])):
                    rim = rim_signature(lam, i, reduced=True)
                    beta = beta_signature(w, beta_of_content(i, p), reduced=True)
                    if beta_of_content(i, p) == 0:
                        assert rim + ((MINUS, w.n),) == beta
                    else:
                        assert rim == beta


def test_crystal_graph_examples():
    g = crystal_graph(3, 2)
    assert g.vertices == ((), (1,), (2,))
    assert g.edges == (((), 0, (1,)), ((1,), 1, (2,)))
    g2 = crystal_graph(5, 1)
    assert g2.vertices == ((), (1,))
    assert g2.edges == (((), 0, (1,)),)
    assert crystal_graph(3, 0).vertices == ((),)


def test_crystal_graph_vertices_match_enumeration():
    # brute-force oracle: filter all partitions by the definitions directly
    def restricted_oracle(parts, p):
        for a, b in zip(parts, parts[1:]):
            if a == b and a % p != 0:
                return False
        padded = parts + (0,)
        for a, b in zip(padded, padded[1:]):
            if (a % p == 0 and a - b >= p) or (a % p != 0 and a - b > p):
                return False
        return True

    for p in (3, 5):
        g = crystal_graph(p, 10)
        for n in range(11):
            mine = {v for v in g.vertices if sum(v) == n}
            oracle = {parts for parts in partitions_of(n) if restricted_oracle(parts, p)}
            assert mine == oracle


def test_operators_are_mutually_inverse():
    for p in (3, 5):
        for lam in crystal_graph(p, 8).vertices:
            part = PStrictPartition(lam, p)
            for i in contents_for(p, 12):
                up = f_tilde(i, part)
                if up is not None:
                    down = e_tilde(i, up)
                    assert down is not None and down.parts == part.parts
                down = e_tilde(i, part)
                if down is not None:
                    assert down.is_restricted() or not part.is_restricted()
                    assert f_tilde(i, down).parts == part.parts


def test_spin_stats_examples():
    assert spin_stats(WORKED)[:2] == (4, "M")
    assert spin_stats(PStrictPartition((2,), 3))[2] == (1, 1)
    assert spin_stats(PStrictPartition((), 5)) == (0, "M", (0, 0, 0))


def test_branching_tables_examples():
    rsoc, rsp, isoc, isp = branching_tables(PStrictPartition((2,), 3))
    assert [(mu.parts, node) for mu, node in rsoc] == [((1,), (1, 2))]
    rsoc1, _, _, _ = branching_tables(PStrictPartition((1,), 5))
    assert [(mu.parts, node) for mu, node in rsoc1] == [((), (1, 1))]
    _, _, isoc0, _ = branching_tables(PStrictPartition((), 3))
    assert [(mu.parts, node) for mu, node in isoc0] == [((1,), (1, 1))]
    with pytest.raises(NotRestricted):
        branching_tables(PStrictPartition((7,), 3))


def test_branching_tables_outputs_restricted():
    for p in (3, 5):
        for lam in restricted_partitions(p, 7):
            tables = branching_tables(lam)
            for table in tables:
                for mu, _ in table:
                    assert mu.is_restricted()


def test_normal_node_removal_can_leave_restrictedness():
    # (3,1) at p=3 has a normal node whose removal gives the non-restricted (3);
    # the Specht table therefore omits it
    lam = PStrictPartition((3, 1), 3)
    assert (2, 1) in normal_nodes(lam, 0)
    _, rsp, _, _ = branching_tables(lam)
    assert all(node != (2, 1) for _, node in rsp)


def test_graph_export_formats():
    g = crystal_graph(5, 1)
    dot = g.to_dot()
    assert dot.count("->") == 1 and '"(1)"' in dot and '"()"' in dot
    data = CrystalGraph(5, 1, g.vertices, g.edges).to_json()
    assert '"vertices": [[], [1]]' in data


def test_node_level_matches_index_level_on_padded_weights():
    # good/normal nodes of a partition agree with good/normal indices of the
    # padded weight at the matching residue
    from spinbranch.indices import good as w_good
    from spinbranch.indices import normal as w_normal

    for p in (3, 5):
        for n in range(1, 9):
            for lam in restricted_partitions(p, n):
                w = lam.pad_weight()
                for i in contents_for(p, max([1] + [v + 2 for v in lam.parts])):
                    beta = beta_of_content(i, p)
                    rows_normal = {
                        r for r in range(1, w.n)
                        if w.residue(r) == beta and w_normal(w, r)
                    }
                    assert rows_normal == {nd[0] for nd in normal_nodes(lam, i)}
                    rows_good = {
                        r for r in range(1, w.n)
                        if w.residue(r) == beta and w_good(w, r)
                    }
                    assert rows_good == {nd[0] for nd in good_nodes(lam, i)}
