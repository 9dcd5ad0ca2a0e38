"""Classification of weight indices (normal, good, and their tensor and
dual variants), certificates of non-normality, and the combinatorial
planners behind primitive-vector constructions and extensions.

Everything here is driven by reductions of the sign maps r_beta(lambda):
an index is tensor normal when its minus survives the full reduction, and
normal (for i < n) when it survives the reduction over [1..n) and the
boundary exception does not apply.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .core import SignedSet, Weight, congruent, res_p, seg_oc, seg_oo
from .sigseq import (
    MINUS,
    PLUS,
    Flow,
    PreconditionFailed,
    SignMap,
    build_full_flow,
    flow_analyze,
    lead_plus_index,
    partial_flow,
    plus_count,
    product_of,
    r_beta,
    reduce_seq,
    reduced_product,
    resolution_of,
    section_of,
    signs,
    split_index,
)


class IsNormal(ValueError):
    pass


class NotNormal(ValueError):
    pass


class UnreachableCase(AssertionError):
    """Raised when a case dispatch falls through; signals an implementation bug."""


@dataclass(frozen=True)
class IndexClassification:
    index: int
    residue: int
    tensor_normal: bool
    normal: bool
    tensor_conormal: bool
    good: bool
    tensor_good: bool
    tensor_cogood: bool


def _contains_mark(seq, sign: int, mark: int) -> bool:
    return any(s == sign and m == mark for s, m in seq)


def tensor_normal(lam: Weight, i: int) -> bool:
    beta = lam.residue(i)
    return _contains_mark(reduced_product(r_beta(lam, beta)), MINUS, i)


def normal(lam: Weight, i: int) -> bool:
    """Minus of index i survives over [1..n), minus the boundary exception
    (empty reduction strictly after i while both lambda_i and lambda_n are
    divisible by p)."""
    n = lam.n
    if not 1 <= i < n:
        return False
    beta = lam.residue(i)
    u = r_beta(lam, beta)
    head = reduce_seq(product_of(u, range(1, n)))
    if not _contains_mark(head, MINUS, i):
        return False
    gap_empty = not reduce_seq(product_of(u, range(i + 1, n)))
    if gap_empty and congruent(lam.entry(i), 0, lam.p) and congruent(lam.entry(n), 0, lam.p):
        return False
    return True


def tensor_conormal(lam: Weight, i: int) -> bool:
    beta = res_p(lam.entry(i) + 1, lam.p)
    return _contains_mark(reduced_product(r_beta(lam, beta)), PLUS, i)


def good(lam: Weight, i: int) -> bool:
    if not normal(lam, i):
        return False
    return not any(
        normal(lam, h) for h in range(1, i) if lam.residue(h) == lam.residue(i)
    )


def tensor_good(lam: Weight, i: int) -> bool:
    if not tensor_normal(lam, i):
        return False
    return not any(
        tensor_normal(lam, h)
        for h in range(1, i)
        if lam.residue(h) == lam.residue(i)
    )


def tensor_cogood(lam: Weight, i: int) -> bool:
    """Maximal tensor conormal index in its class; conormal indices are
    grouped by the residue of (entry + 1), matching the -w0 duality."""
    if not tensor_conormal(lam, i):
        return False
    my = res_p(lam.entry(i) + 1, lam.p)
    return not any(
        tensor_conormal(lam, h)
        for h in range(i + 1, lam.n + 1)
        if res_p(lam.entry(h) + 1, lam.p) == my
    )


def classify_index(lam: Weight, i: int) -> IndexClassification:
    return IndexClassification(
        index=i,
        residue=lam.residue(i),
        tensor_normal=tensor_normal(lam, i),
        normal=normal(lam, i),
        tensor_conormal=tensor_conormal(lam, i),
        good=good(lam, i),
        tensor_good=tensor_good(lam, i),
        tensor_cogood=tensor_cogood(lam, i),
    )


def index_report(lam: Weight) -> dict[int, list[IndexClassification]]:
    """Classification of every index, grouped by residue class."""
    groups: dict[int, list[IndexClassification]] = {}
    for i in range(1, lam.n + 1):
        cls = classify_index(lam, i)
        groups.setdefault(cls.residue, []).append(cls)
    return groups


# -- certificates of non-normality ---------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Combinatorial witness that an index is not normal.

    Cases a/b carry a coherent-but-not-fully-coherent flow on (i..j] with
    no buds; cases c/d carry a fully coherent flow on (i..j) with no buds.
    The scalar c is the product of (beta - residue) over the recorded range
    minus the sources, and is nonzero.
    """

    case_tag: str
    index: int
    j: int
    flow: Flow
    m_set: SignedSet
    sources: frozenset[int]
    c: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "case": self.case_tag,
                "i": self.index,
                "j": self.j,
                "flow": sorted([a, b] for a, b in self.flow.edges),
                "M": {
                    "even": sorted(self.m_set.evens),
                    "odd": sorted(self.m_set.odds),
                },
                "sources": sorted(self.sources),
                "c": self.c,
            }
        )


def non_normal_certificate(lam: Weight, i: int) -> Certificate:
    """Build the witness for a non-normal index.

    Cases: (a) nonzero residue with a surviving plus after i; (b) zero
    residue with two surviving pluses; (c) entry divisible by p with exactly
    one surviving plus; (d) empty reduction after i with both boundary
    entries divisible by p.
    """
    n = lam.n
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < n, got i={i}, n={n}")
    if normal(lam, i):
        raise IsNormal(f"index {i} is normal for {lam.parts}")
    p = lam.p
    beta = lam.residue(i)
    u = r_beta(lam, beta)
    gap = list(range(i + 1, n))
    red_gap = reduce_seq(product_of(u, gap))
    pluses = plus_count(red_gap)
    beta_zero = congruent(lam.entry(i) * (lam.entry(i) - 1), 0, p)

    if (not beta_zero and pluses >= 1) or (beta_zero and pluses >= 2):
        tag = "a" if not beta_zero else "b"
        j_set, flow = partial_flow(u.restrict(gap))
        j = max(j_set)
        srcs = flow.sources()
        m_set = SignedSet.of(
            evens=[t for t in seg_oc(i, j) if t not in srcs], odds=[j + 1]
        )
        c = _residue_product(lam, beta, [t for t in seg_oc(i, j) if t not in srcs])
        return Certificate("a" if tag == "a" else "b", i, j, flow, m_set, srcs, c)

    if beta_zero and pluses == 1 and congruent(lam.entry(i), 0, p):
        j = min(section_of(u.restrict(gap)))
        tag = "c"
    elif not red_gap and congruent(lam.entry(i), 0, p) and congruent(lam.entry(n), 0, p):
        j = n
        tag = "d"
    else:
        raise UnreachableCase(f"no certificate case matched for {lam.parts}, i={i}")

    inner = [t for t in seg_oo(i, j)]
    flow = build_full_flow(u.restrict(inner))
    srcs = flow.sources()
    m_set = SignedSet.of(evens=[t for t in inner if t not in srcs], odds=[j])
    c = _residue_product(lam, beta, [t for t in inner if t not in srcs])
    return Certificate(tag, i, j, flow, m_set, srcs, c)


def _residue_product(lam: Weight, beta: int, ts) -> int:
    p = lam.p
    out = 1
    for t in ts:
        out *= beta - res_p(lam.entry(t), p)
    return out % p if p else out


def validate_certificate(lam: Weight, cert: Certificate) -> bool:
    """Re-check a certificate against the sign-map predicates."""
    beta = lam.residue(cert.index)
    u = r_beta(lam, beta)
    i, j = cert.index, cert.j
    if cert.case_tag in ("a", "b"):
        rep = flow_analyze(cert.flow, u.restrict(seg_oc(i, j)))
        shape_ok = rep.is_flow and rep.coherent and not rep.fully_coherent
    else:
        rep = flow_analyze(cert.flow, u.restrict(seg_oo(i, j)))
        shape_ok = rep.is_flow and rep.fully_coherent
    rng = seg_oc(i, j) if cert.case_tag in ("a", "b") else seg_oo(i, j)
    c = _residue_product(lam, beta, [t for t in rng if t not in cert.sources])
    return shape_ok and not rep.buds and c == cert.c and _nonzero(c, lam.p)


def _nonzero(c: int, p: int) -> bool:
    return (c % p != 0) if p else (c != 0)


# -- construction planners -------------------------------------------------------


@dataclass(frozen=True)
class PlanStep:
    theorem: str
    data: dict

    def to_jsonable(self) -> dict:
        return {"theorem": self.theorem, "data": _jsonable(self.data)}


def _jsonable(value):
    if isinstance(value, Flow):
        return sorted([a, b] for a, b in value.edges)
    if isinstance(value, SignedSet):
        return {"even": sorted(value.evens), "odd": sorted(value.odds)}
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return [_jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass(frozen=True)
class ConstructionPlan:
    steps: tuple[PlanStep, ...]

    def to_json(self) -> str:
        return json.dumps({"steps": [s.to_jsonable() for s in self.steps]})


def _full_flow_payload(lam: Weight, beta: int, lo: int, hi_inclusive: bool, hi: int):
    """Fully coherent flow on (lo..hi] or (lo..hi) and the leftover set."""
    u = r_beta(lam, beta)
    dom = list(seg_oc(lo, hi)) if hi_inclusive else list(seg_oo(lo, hi))
    flow = build_full_flow(u.restrict(dom))
    srcs = flow.sources()
    leftovers = [t for t in dom if t not in srcs]
    return flow, srcs, leftovers


def _base_step(lam: Weight, i: int) -> PlanStep:
    """Dispatch between the two base constructions at index i (producing a
    primitive vector of weight lambda - alpha(i, n))."""
    n = lam.n
    p = lam.p
    beta = lam.residue(i)
    u = r_beta(lam, beta)
    red_gap = reduce_seq(product_of(u, range(i + 1, n)))
    if plus_count(red_gap):
        raise UnreachableCase("base step with a surviving plus in the gap")
    if red_gap:
        # minuses survive: the closed-range construction
        flow, srcs, leftovers = _full_flow_payload(lam, beta, i, True, n)
        m_set = SignedSet.of(evens=leftovers)
        return PlanStep(
            "T6.1.3", {"i": i, "beta": beta, "flow": flow, "M": m_set}
        )
    if congruent(lam.entry(i), 0, p) and congruent(lam.entry(n), 0, p):
        raise UnreachableCase("base step at a non-normal index")
    flow, srcs, leftovers = _full_flow_payload(lam, beta, i, False, n)
    m_set = SignedSet.of(evens=leftovers, odds=[n])
    return PlanStep("T6.2.3", {"i": i, "beta": beta, "flow": flow, "M": m_set})


def _resolution_step(lam: Weight, i: int) -> PlanStep:
    """The one-odd construction driven by a resolution of r_0 on (i..n]."""
    n = lam.n
    u = r_beta(lam, 0)
    delta = resolution_of(u.restrict(seg_oc(i, n)))
    srcs = delta.sources()
    q = max(a for a, b in delta.edges if a == b)
    leftovers = [t for t in seg_oc(i, n) if t not in srcs]
    m_set = SignedSet.of(evens=leftovers, odds=[q])
    return PlanStep(
        "T6.3.3", {"i": i, "beta": 0, "resolution": delta, "q": q, "M": m_set}
    )


def _extension_flow_step(lam: Weight, theorem: str, h: int, i: int) -> PlanStep:
    """Payload for the two flow-based extension steps from i down to h."""
    beta = lam.residue(i)
    u = r_beta(lam, beta)
    flow = build_full_flow(u.restrict(seg_oc(h, i)))
    srcs = flow.sources()
    if theorem == "T6.4.2":
        leftovers = [t for t in seg_oo(h, i) if t not in srcs]
        m_set = SignedSet.of(evens=leftovers, odds=[i])
    else:  # T6.5.2
        leftovers = [t for t in seg_oc(h, i) if t not in srcs]
        m_set = SignedSet.of(evens=leftovers)
    return PlanStep(theorem, {"h": h, "i": i, "beta": beta, "flow": flow, "M": m_set})


def _joined_extension_step(lam: Weight, h: int, i: int) -> PlanStep:
    """Payload for the section-joining extension step (plus-led reduction)."""
    u = r_beta(lam, 0)
    inner = list(seg_oo(h, i))
    red_inner = reduce_seq(product_of(u, inner))
    edges: set[tuple[int, int]] = set()
    loops: set[tuple[int, int]] = {(i, i)}
    if not red_inner:
        gamma0 = build_full_flow(u.restrict(inner))
        edges = set(gamma0.edges) | {(h, i)}
        loops |= set(gamma0.edges)
    else:
        sec = section_of(u.restrict(inner))
        chain = (h,) + sec + (i,)
        edges = set(zip(chain, chain[1:]))
        loops |= {(a, a) for a in sec}
        bounds = (h,) + sec + (i,)
        for lo, hi in zip(bounds, bounds[1:]):
            gap = [t for t in inner if lo < t < hi]
            piece = set(build_full_flow(u.restrict(gap)).edges)
            edges |= piece
            loops |= piece
    gamma = Flow(frozenset(edges))
    delta = Flow(frozenset(loops))
    srcs = gamma.sources() - {h}
    m_set = SignedSet.of(evens=[t for t in inner if t not in srcs])
    return PlanStep(
        "T6.6.2",
        {"h": h, "i": i, "beta": 0, "flow": gamma, "weak_flow": delta, "M": m_set},
    )


def primitive_plan(lam: Weight, i: int) -> ConstructionPlan:
    """Steps producing a primitive vector of weight lambda - alpha(i, n)
    for a normal index i, following the four-way case split on the
    reduction strictly between i and n."""
    n = lam.n
    if not normal(lam, i):
        raise NotNormal(f"index {i} is not normal for {lam.parts}")
    p = lam.p
    beta = lam.residue(i)
    u = r_beta(lam, beta)
    red_gap = reduce_seq(product_of(u, range(i + 1, n)))
    if plus_count(red_gap) == 0:
        return ConstructionPlan((_base_step(lam, i),))
    # plus-led gap: only possible at residue zero with entry = 1 mod p
    if not congruent(lam.entry(i), 1, p):
        raise UnreachableCase("plus-led gap at a normal index needs entry = 1 mod p")
    if not congruent(lam.entry(n), -1, p):
        return ConstructionPlan((_resolution_step(lam, i),))
    a = max(section_of(u.restrict(seg_oo(i, n))))
    return ConstructionPlan((_base_step(lam, a), _joined_extension_step(lam, i, a)))


def extension_plan(lam: Weight, h: int, i: int) -> ConstructionPlan:
    """Steps extending a primitive vector of weight lambda - alpha(i, n) to
    one of weight lambda - alpha(h, n), for a normal h < i of equal residue."""
    n = lam.n
    if not (1 <= h < i < n):
        raise PreconditionFailed(f"need h < i < n, got h={h}, i={i}, n={n}")
    if lam.residue(h) != lam.residue(i):
        raise PreconditionFailed("indices have different residues")
    if not normal(lam, h):
        raise PreconditionFailed(f"index {h} is not normal for {lam.parts}")
    p = lam.p
    beta = lam.residue(i)
    beta_zero = congruent(lam.entry(i) * (lam.entry(i) - 1), 0, p)
    if not beta_zero:
        return ConstructionPlan((_extension_flow_step(lam, "T6.5.2", h, i),))
    u = r_beta(lam, 0)
    red = reduce_seq(product_of(u, seg_oc(h, i)))
    pluses = plus_count(red)
    one_mod = congruent(lam.entry(i), 1, p)
    if pluses == 0 and one_mod:
        theorem = "T6.5.2" if congruent(lam.entry(h), 1, p) else "T6.4.2"
        return ConstructionPlan((_extension_flow_step(lam, theorem, h, i),))
    if pluses == 0 and not one_mod:
        a = split_index(u.restrict(seg_oo(h, i)))
        theorem = "T6.5.2" if congruent(lam.entry(h), 1, p) else "T6.4.2"
        return ConstructionPlan(
            (_joined_extension_step(lam, a, i), _extension_flow_step(lam, theorem, h, a))
        )
    if pluses == 1 and one_mod:
        a = max(section_of(u.restrict(seg_oc(h, i))))
        return ConstructionPlan(
            (
                _extension_flow_step(lam, "T6.4.2", a, i),
                _joined_extension_step(lam, h, a),
            )
        )
    if pluses == 1 and not one_mod:
        return ConstructionPlan((_joined_extension_step(lam, h, i),))
    raise UnreachableCase(f"extension dispatch fell through for {lam.parts}, h={h}, i={i}")


# -- payload validation -----------------------------------------------------------


def validate_plan(lam: Weight, plan: ConstructionPlan) -> bool:
    """Structural validation: every step's payload satisfies its
    construction's combinatorial hypotheses."""
    return all(validate_step(lam, step) for step in plan.steps)


def validate_step(lam: Weight, step: PlanStep) -> bool:
    p = lam.p
    n = lam.n
    d = step.data
    th = step.theorem
    if th == "T6.1.3":
        i, beta = d["i"], d["beta"]
        u = r_beta(lam, beta).restrict(seg_oc(i, n))
        rep = flow_analyze(d["flow"], u)
        red = reduced_product(u)
        return (
            plus_count(red) == 0
            and rep.is_flow
            and rep.fully_coherent
            and d["M"].contains_even(n)
            and set(d["M"].evens) == set(seg_oc(i, n)) - d["flow"].sources()
        )
    if th == "T6.2.3":
        i, beta = d["i"], d["beta"]
        u = r_beta(lam, beta).restrict(seg_oo(i, n))
        rep = flow_analyze(d["flow"], u)
        red = reduced_product(u)
        not_both = not (
            congruent(lam.entry(i), 0, p) and congruent(lam.entry(n), 0, p)
        )
        return (
            plus_count(red) == 0
            and not_both
            and rep.is_flow
            and rep.fully_coherent
            and d["M"].contains_odd(n)
            and set(d["M"].evens) == set(seg_oo(i, n)) - d["flow"].sources()
        )
    if th == "T6.3.3":
        i = d["i"]
        u = r_beta(lam, 0).restrict(seg_oc(i, n))
        red = reduced_product(u)
        rep = flow_analyze(d["resolution"], u)
        shape = plus_count(red) == 1 and red and red[0][0] == PLUS
        return bool(
            shape
            and congruent(lam.entry(i), 1, p)
            and rep.is_weak_flow
            and not rep.is_flow
            and rep.fully_coherent
            and d["M"].contains_odd(d["q"])
        )
    if th == "T6.4.2":
        h, i = d["h"], d["i"]
        u = r_beta(lam, 0).restrict(seg_oc(h, i))
        rep = flow_analyze(d["flow"], u)
        return (
            congruent(lam.entry(h), 0, p)
            and congruent(lam.entry(i), 1, p)
            and plus_count(reduced_product(u)) == 0
            and rep.is_flow
            and rep.fully_coherent
            and d["M"].contains_odd(i)
        )
    if th == "T6.5.2":
        h, i, beta = d["h"], d["i"], d["beta"]
        u = r_beta(lam, beta).restrict(seg_oc(h, i))
        rep = flow_analyze(d["flow"], u)
        hyp = not congruent(lam.entry(i), 0, p) and not (
            congruent(lam.entry(h), 0, p) and congruent(lam.entry(i), 1, p)
        )
        return (
            hyp
            and lam.residue(h) == lam.residue(i)
            and plus_count(reduced_product(u)) == 0
            and rep.is_flow
            and rep.fully_coherent
            and d["M"].contains_even(i)
        )
    if th == "T6.6.2":
        h, i = d["h"], d["i"]
        u_closed = r_beta(lam, 0).restrict(seg_oc(h, i))
        red = reduced_product(u_closed)
        shape = plus_count(red) == 1 and red and red[0][0] == PLUS
        u_full = r_beta(lam, 0).restrict(range(h, i + 1))
        rep_gamma = flow_analyze(d["flow"], u_full)
        rep_delta = flow_analyze(d["weak_flow"], u_closed)
        return bool(
            shape
            and congruent(lam.entry(h), 1, p)
            and congruent(lam.entry(i), 0, p)
            and rep_gamma.is_flow
            and rep_gamma.coherent
            and rep_delta.is_weak_flow
            and not rep_delta.is_flow
            and rep_delta.fully_coherent
        )
    raise UnreachableCase(f"unknown theorem tag {th}")
