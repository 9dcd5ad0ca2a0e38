import json
import random

import pytest

from spinbranch.core import Weight
from spinbranch.indices import (
    IsNormal,
    NotNormal,
    classify_index,
    extension_plan,
    good,
    index_report,
    non_normal_certificate,
    normal,
    primitive_plan,
    tensor_cogood,
    tensor_conormal,
    tensor_good,
    tensor_normal,
    validate_certificate,
    validate_plan,
)
from spinbranch.sigseq import PreconditionFailed

WORKED = Weight((16, 11, 10, 10, 9, 5, 1, 0), 5)


def test_classify_worked_weight():
    cls = classify_index(WORKED, 1)
    assert cls.normal and cls.good and cls.tensor_normal and cls.tensor_good
    assert cls.residue == 0
    assert not normal(WORKED, 3)


def test_classify_boundary_exception():
    lam = Weight((0, 0), 5)
    assert not normal(lam, 1)
    assert tensor_normal(lam, lam.n)  # the last index always is
    assert tensor_conormal(lam, 1)  # the first index always is


def test_index_report_examples():
    rep = index_report(Weight((1,), 5))
    cls = rep[0][0]
    assert cls.tensor_normal and cls.tensor_good

    rep2 = index_report(Weight((0, 0), 5))
    by_index = {c.index: c for group in rep2.values() for c in group}
    assert by_index[2].tensor_normal and not by_index[1].tensor_normal
    assert by_index[1].tensor_conormal

    lam = Weight((2, 1), 5)
    rep3 = index_report(lam)
    assert {c.index for c in rep3[2]} == {1}
    assert not classify_index(lam, 1).tensor_normal


def test_good_is_minimal_normal_per_class():
    rng = random.Random(99)
    for _ in range(400):
        p = rng.choice([3, 5, 7])
        n = rng.randint(1, 6)
        lam = Weight(tuple(rng.randint(-4, 9) for _ in range(n)), p)
        for residue, group in index_report(lam).items():
            normals = [c.index for c in group if c.normal]
            goods = [c.index for c in group if c.good]
            assert goods == (normals[:1] if normals else [])
            tnormals = [c.index for c in group if c.tensor_normal]
            tgoods = [c.index for c in group if c.tensor_good]
            assert tgoods == (tnormals[:1] if tnormals else [])


def test_certificate_case_d():
    cert = non_normal_certificate(Weight((0, 0), 5), 1)
    assert cert.case_tag == "d" and cert.j == 2
    assert cert.flow.edges == frozenset()
    assert cert.m_set.odds == frozenset({2}) and not cert.m_set.evens
    assert cert.c == 1
    assert validate_certificate(Weight((0, 0), 5), cert)


def test_certificate_case_a():
    lam = Weight((2, 1, 0), 5)
    cert = non_normal_certificate(lam, 1)
    assert cert.case_tag == "a" and cert.j == 2
    assert cert.flow.edges == frozenset()
    assert cert.m_set.evens == frozenset({2}) and cert.m_set.odds == frozenset({3})
    assert cert.c == 2
    assert validate_certificate(lam, cert)
    data = json.loads(cert.to_json())
    assert data["case"] == "a" and data["c"] == 2 and data["M"]["odd"] == [3]


def test_certificate_worked_index_3():
    cert = non_normal_certificate(WORKED, 3)
    assert cert.case_tag == "b"
    assert cert.c % 5 != 0
    assert validate_certificate(WORKED, cert)


def test_certificate_rejects_normal_index():
    with pytest.raises(IsNormal):
        non_normal_certificate(WORKED, 1)


def test_primitive_plan_examples():
    plan = primitive_plan(Weight((1, 0), 5), 1)
    assert [s.theorem for s in plan.steps] == ["T6.2.3"]
    assert plan.steps[0].data["M"].odds == frozenset({2})
    assert validate_plan(Weight((1, 0), 5), plan)

    lam = Weight((2, 2, 0), 5)  # nonzero residue, all-minus gap
    plan2 = primitive_plan(lam, 1)
    assert [s.theorem for s in plan2.steps] == ["T6.1.3"]
    assert validate_plan(lam, plan2)

    lam3 = Weight((1, 0, 4), 5)  # entry 1 mod p, plus-led gap, last entry -1 mod p
    plan3 = primitive_plan(lam3, 1)
    assert [s.theorem for s in plan3.steps] == ["T6.2.3", "T6.6.2"]
    assert plan3.steps[0].data["i"] == 2
    assert plan3.steps[1].data["h"] == 1 and plan3.steps[1].data["i"] == 2
    assert validate_plan(lam3, plan3)

    lam4 = Weight((1, 0, 0, 3), 5)  # resolution-driven single step
    plan4 = primitive_plan(lam4, 1)
    assert [s.theorem for s in plan4.steps] == ["T6.3.3"]
    assert plan4.steps[0].data["M"].odds == frozenset({3})
    assert validate_plan(lam4, plan4)

    with pytest.raises(NotNormal):
        primitive_plan(Weight((0, 0), 5), 1)


def test_extension_plan_examples():
    lam = Weight((2, 2, 0), 5)
    plan = extension_plan(lam, 1, 2)
    assert [s.theorem for s in plan.steps] == ["T6.5.2"]
    assert validate_plan(lam, plan)

    lam2 = Weight((5, 1, 0), 5)  # entries 0 and 1 mod p, all-minus gap
    plan2 = extension_plan(lam2, 1, 2)
    assert [s.theorem for s in plan2.steps] == ["T6.4.2"]
    assert validate_plan(lam2, plan2)

    lam3 = Weight((1, 0, 0), 5)  # entries 1 and 0 mod p, plus-led gap
    plan3 = extension_plan(lam3, 1, 2)
    assert [s.theorem for s in plan3.steps] == ["T6.6.2"]
    assert validate_plan(lam3, plan3)

    with pytest.raises(PreconditionFailed):
        extension_plan(Weight((2, 1, 0), 5), 1, 2)  # different residues


def test_extension_plan_two_step_cases():
    # all-minus closed gap with entry 0 mod p at the top: split at the last
    # double-minus index, then extend across it
    lam = Weight((5, 1, 5, 0), 5)
    assert normal(lam, 1) and lam.residue(1) == lam.residue(3)
    plan = extension_plan(lam, 1, 3)
    assert [s.theorem for s in plan.steps] == ["T6.6.2", "T6.4.2"]
    assert validate_plan(lam, plan)
    # plus-led gap with entry 1 mod p at the top: section first
    lam2 = Weight((1, 0, 1, 0), 5)
    assert normal(lam2, 1) and lam2.residue(1) == lam2.residue(3)
    plan2 = extension_plan(lam2, 1, 3)
    assert [s.theorem for s in plan2.steps] == ["T6.4.2", "T6.6.2"]
    assert validate_plan(lam2, plan2)


def test_shortcut_matches_definition():
    # classification through the full product agrees with the tail shortcut
    from spinbranch.sigseq import MINUS, product_of, r_beta, reduce_seq

    rng = random.Random(3)
    for _ in range(300):
        p = rng.choice([3, 5, 7])
        n = rng.randint(1, 6)
        lam = Weight(tuple(rng.randint(-4, 9) for _ in range(n)), p)
        for i in range(1, n + 1):
            beta = lam.residue(i)
            u = r_beta(lam, beta)
            full = reduce_seq(product_of(u))
            tail = reduce_seq(product_of(u, range(i, n + 1)))
            has_full = any(s == MINUS and m == i for s, m in full)
            has_tail = any(s == MINUS and m == i for s, m in tail)
            assert has_full == has_tail == tensor_normal(lam, i)


def test_plan_json_shape():
    plan = primitive_plan(Weight((1, 0), 5), 1)
    data = json.loads(plan.to_json())
    assert data["steps"][0]["theorem"] == "T6.2.3"
    assert data["steps"][0]["data"]["M"] == {"even": [], "odd": [2]}


def test_duality_examples():
    lam = Weight((0, 1), 5)
    assert tensor_cogood(lam, 1) and tensor_cogood(lam, 2)
    mw = lam.minus_w0()
    assert tensor_good(mw, 1) and tensor_good(mw, 2)


def test_characteristic_zero_classification():
    lam = Weight((3, 1, 0), 0)
    # residues are plain integers; everything still evaluates
    rep = index_report(lam)
    assert any(c.tensor_normal for group in rep.values() for c in group)
    assert tensor_conormal(lam, 1)
    for i in (1, 2):
        if not normal(lam, i):
            cert = non_normal_certificate(lam, i)
            assert validate_certificate(lam, cert)
        else:
            assert validate_plan(lam, primitive_plan(lam, i))
