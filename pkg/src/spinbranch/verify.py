"""Self-contained verification suites behind `spinbranch verify` and the
acceptance tests.  Each suite replays one family of identities or
constructions and reports every mismatch; randomized suites take an
explicit seed so reruns are byte-identical.
"""
from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from itertools import combinations, product

from . import crystal as cr
from . import indices as ix
from .core import SignedSet, Weight
from .poly import (
    LFunction,
    Polynomial,
    d_floor,
    f_poly,
    g1,
    g2,
    lin_reduce,
    sigma_apply,
    x,
    y,
)
from .raising import DeltaFunction, two_term_sum_sides, raising_closed, raising_rec
from .sigseq import (
    MINUS,
    PAIR_VALUES,
    PLUS,
    SINGLE_VALUES,
    NotAllMinus,
    SignMap,
    build_full_flow,
    flow_analyze,
    lead_plus_index,
    minus_count,
    partial_flow,
    plus_count,
    product_of,
    r_beta,
    reduce_random_order,
    reduce_seq,
    reduced_product,
    resolution_of,
    section_of,
    signs,
    split_index,
)

SUITES = (
    "reduction",
    "flows",
    "poly-identities",
    "raising-oracle",
    "signature-bridge",
    "duality",
    "certificates",
)


@dataclass
class VerdictReport:
    suite: str
    parameters: dict
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, descriptor: str, expected, actual):
        self.cases += 1
        if expected != actual:
            self.failures.append((descriptor, str(expected), str(actual)))

    def record(self, descriptor: str, ok: bool, detail: str = ""):
        self.cases += 1
        if not ok:
            self.failures.append((descriptor, "ok", detail or "failed"))

    def finish(self) -> "VerdictReport":
        self.failures.sort()
        return self

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "parameters": self.parameters,
                "cases": self.cases,
                "pass": self.passed,
                "failures": [list(f) for f in self.failures],
            }
        )


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("SPINBRANCH_THREADS", "1")))
    except ValueError:
        return 1


def random_weight(rng: random.Random, p: int, n: int, lo: int = -4, hi: int = 12) -> Weight:
    return Weight(tuple(rng.randint(lo, hi) for _ in range(n)), p)


def random_dominant_p_strict(rng: random.Random, p: int, n: int, hi: int = 12) -> Weight:
    while True:
        parts = tuple(sorted((rng.randint(0, hi) for _ in range(n)), reverse=True))
        w = Weight(parts, p)
        if w.is_p_strict():
            return w


# -- suite: reduction ----------------------------------------------------------


def verify_reduction(samples: int = 10000, max_len: int = 20, orders: int = 10,
                     seed: int = 2024) -> VerdictReport:
    rep = VerdictReport("reduction", {
        "samples": samples, "max_len": max_len, "orders": orders, "seed": seed,
    })
    rng = random.Random(seed)
    for case in range(samples):
        ln = rng.randint(0, max_len)
        u = tuple((rng.choice((PLUS, MINUS)), k) for k in range(ln))
        red = reduce_seq(u)
        a, b = plus_count(u), minus_count(u)
        s, r = plus_count(red), minus_count(red)
        shape_ok = signs(red) == "+" * s + "-" * r and s - r == a - b
        rep.record(f"shape case={case}", shape_ok, signs(red))
        for _ in range(orders):
            rep.check(f"order case={case}", red, reduce_random_order(u, rng))
    return rep.finish()


# -- suite: flows ---------------------------------------------------------------


def verify_flows(max_domain: int = 6) -> VerdictReport:
    rep = VerdictReport("flows", {"max_domain": max_domain})
    for mode, alphabet in (("single", SINGLE_VALUES), ("pair", PAIR_VALUES)):
        for d in range(max_domain + 1):
            for vals in product(alphabet, repeat=d):
                u = SignMap.make(mode, {k + 1: v for k, v in enumerate(vals)})
                _flow_cases(rep, u)
    return rep.finish()


def _flow_cases(rep: VerdictReport, u: SignMap):
    mode = u.mode
    tag = f"{mode}:{','.join(v or '.' for _, v in u.values)}"
    red = reduced_product(u)
    s, r = plus_count(red), minus_count(red)
    if s == 0:
        g = build_full_flow(u)
        fa = flow_analyze(g, u)
        want_buds = r if mode == "single" else r // 2
        rep.record(
            f"full-flow {tag}",
            fa.is_flow and fa.fully_coherent and len(fa.buds) == want_buds,
            str(fa),
        )
    else:
        try:
            build_full_flow(u)
            rep.record(f"full-flow-reject {tag}", False, "no error raised")
        except NotAllMinus:
            rep.record(f"full-flow-reject {tag}", True)
    if mode == "pair" and s == 0 and r > 0:
        a = split_index(u)
        tail = reduce_seq(product_of(u, [k for k in u.domain if k > a]))
        head = reduce_seq(product_of(u, [k for k in u.domain if k <= a]))
        ok = (
            u.value(a) == "--"
            and signs(tail) in ("", "+-")
            and signs(head) == "-" * r
        )
        rep.record(f"split {tag}", ok, f"a={a}")
    if mode == "pair" and s == 1 and red[0][0] == PLUS:
        a = lead_plus_index(u)
        prefix = reduce_seq(product_of(u, [k for k in u.domain if k < a]))
        rep.record(f"lead {tag}", u.value(a) == "+-" and not prefix, f"a={a}")
        sec = section_of(u)
        ok = bool(sec) and all(u.value(k) == "+-" for k in sec)
        bounds = (float("-inf"),) + sec
        for lo, hi in zip(bounds, sec):
            gap = [k for k in u.domain if lo < k < hi]
            ok = ok and not reduce_seq(product_of(u, gap))
        tail = [k for k in u.domain if k > sec[-1]]
        ok = ok and signs(reduce_seq(product_of(u, tail))) == "-" * (r - 1)
        rep.record(f"section {tag}", ok, str(sec))
        res = resolution_of(u)
        fa = flow_analyze(res, u)
        rep.record(
            f"resolution {tag}",
            fa.is_weak_flow and not fa.is_flow and fa.fully_coherent,
            str(fa),
        )
    need = 1 if mode == "single" else 2
    if s >= need:
        j_set, g = partial_flow(u)
        uj = u.restrict(j_set)
        fa = flow_analyze(g, uj)
        want = "+" if mode == "single" else "++"
        ok = (
            signs(reduced_product(uj)) == want
            and set(j_set) == {k for k in u.domain if k <= max(j_set)}
            and fa.is_flow
            and fa.coherent
            and not fa.fully_coherent
            and not fa.buds
        )
        rep.record(f"partial {tag}", ok, f"J={j_set}")


# -- suite: poly identities ------------------------------------------------------


def _subsets(univ):
    univ = sorted(univ)
    for r in range(len(univ) + 1):
        yield from (frozenset(c) for c in combinations(univ, r))


def verify_poly_identities(width: int = 6, lin_width: int = 4,
                           lin_samples: int = 4000, seed: int = 99,
                           offsets=(1,)) -> VerdictReport:
    rep = VerdictReport("poly-identities", {
        "width": width, "lin_width": lin_width, "lin_samples": lin_samples,
        "seed": seed, "offsets": list(offsets),
    })
    rng = random.Random(seed)
    for i in offsets:
        _sigma_commutation(rep, rng, i)
        _sigma_fixes_f(rep, rng, i)
        for w in range(1, width + 1):
            _g_identities(rep, i, i + w)
        _lin_reduce_exhaustive(rep, i, lin_width)
        _lin_reduce_sampled(rep, rng, i, lin_width + 1, lin_samples)
    return rep.finish()


def _random_poly(rng: random.Random, max_idx: int) -> Polynomial:
    out = Polynomial()
    for _ in range(rng.randint(1, 4)):
        term = Polynomial.const(rng.randint(-3, 3))
        for _ in range(rng.randint(0, 3)):
            axis = rng.choice("xy")
            term = term * Polynomial.var(axis, rng.randint(1, max_idx))
        out = out + term
    return out


def _sigma_commutation(rep: VerdictReport, rng: random.Random, base: int):
    for a in range(base, base + 2):
        for b in range(a + 1, base + 4):
            for c in range(b + 1, base + 5):
                for e in (0, 1):
                    for h in (0, 1):
                        f = _random_poly(rng, base + 5)
                        lhs = sigma_apply(a, b, b + e, sigma_apply(a, c, c + h, f))
                        rhs = sigma_apply(b, c, c + h, sigma_apply(a, b, b + e, f))
                        rep.check(f"sigma-braid a={a} b={b} c={c} e={e} h={h}", lhs, rhs)
    for a in range(base, base + 2):
        for b in range(a + 1, base + 3):
            for c in range(b, base + 4):
                for d in range(c + 1, base + 5):
                    for e in (0, 1):
                        if b + e > c:
                            continue
                        for h in (0, 1):
                            f = _random_poly(rng, base + 5)
                            lhs = sigma_apply(a, b, b + e, sigma_apply(c, d, d + h, f))
                            rhs = sigma_apply(c, d, d + h, sigma_apply(a, b, b + e, f))
                            rep.check(f"sigma-disjoint a={a} b={b} c={c} d={d} e={e} h={h}", lhs, rhs)


def _sigma_fixes_f(rep: VerdictReport, rng: random.Random, base: int):
    """Shifts starting at or below c leave the whole f-family over [c..d]
    untouched (checked on random D, l, S)."""
    for _ in range(150):
        c = rng.randint(base + 2, base + 4)
        d = c + rng.randint(1, 3)
        a = rng.randint(base - 1, base + 1)
        b = rng.randint(a + 1, c)
        e = rng.choice([0, 1])
        if b + e > c:
            continue
        univ = list(range(c + 1, d + 1))
        s = frozenset(rng.sample(univ, rng.randint(0, len(univ))))
        dd = frozenset(rng.sample(univ, rng.randint(0, min(2, len(univ)))))
        vals = tuple(rng.randint(0, 1) for _ in univ)
        l = LFunction(c + 1, d, vals)
        fp = f_poly(c, d, dd, l, s)
        rep.check(
            f"sigma-fixes-f a={a} b={b} e={e} c={c} d={d} D={sorted(dd)}"
            f" l={vals} S={sorted(s)}",
            fp,
            sigma_apply(a, b, b + e, fp),
        )


def _g_identities(rep: VerdictReport, i: int, j: int):
    oo = lambda a, b: frozenset(range(a + 1, b))
    oc = lambda a, b: frozenset(range(a + 1, b + 1))
    one = Polynomial.const(1)
    rep.check(f"g1-full i={i} j={j}", x(i) - y(i + 1), g1(i, j, oo(i, j)))
    rep.check(f"g2-unit-a i={i} j={j}", one, g2(i, i, j, j, oc(i, j)))
    rep.check(f"g2-unit-b i={i} j={j}", one, g2(i, i + 1, j, j, oc(i, j)))
    if i + 1 < j:
        for s in _subsets(oo(i + 1, j)):
            tag = f"i={i} j={j} S={sorted(s)}"
            rep.check(
                f"g1-peel {tag}",
                g1(i, j, s),
                (x(i) - y(i + 1)) * g1(i + 1, j, s)
                + (x(i) - x(i + 1)) * g1(i, j, s | {i + 1}),
            )
            rep.check(
                f"g2-merge-a {tag}",
                g2(i, i, i + 1, j, s | {i + 1}),
                g1(i + 1, j, s) + g1(i, j, s | {i + 1}),
            )
            rep.check(
                f"g2-merge-b {tag}", g2(i, i + 1, i + 1, j, s | {i + 1}), g1(i + 1, j, s)
            )
            for q in range(i + 2, j + 1):
                rep.check(
                    f"g2-left-a q={q} {tag}",
                    g2(i, i, q, j, s),
                    (x(i + 1) - y(i + 1)) * g2(i + 1, i + 1, q, j, s)
                    + (x(i) - x(i + 1)) * g2(i, i, q, j, s | {i + 1}),
                )
                rep.check(
                    f"g2-left-b q={q} {tag}",
                    g2(i, i + 1, q, j, s | {i + 1}),
                    g2(i + 1, i + 1, q, j, s),
                )
                if i + 2 in s:
                    rep.check(
                        f"g2-left-c q={q} {tag}",
                        g2(i, i + 2, q, j, s),
                        (x(i) - y(i + 1)) * g2(i + 1, i + 2, q, j, s),
                    )
                for k in range(i + 2, q + 1):
                    rep.check(
                        f"g2-left-d q={q} k={k} {tag}",
                        g2(i, k, q, j, s),
                        (x(i) - y(i + 1)) * g2(i + 1, k, q, j, s)
                        + (x(i) - x(i + 1)) * g2(i, k, q, j, s | {i + 1}),
                    )
    for m in range(i + 2, j):
        for s in _subsets(oo(m, j)):
            tag = f"i={i} m={m} j={j} S={sorted(s)}"
            rep.check(
                f"g1-splice {tag}",
                g1(i, j, oo(i, m) | s),
                (x(i) - y(i + 1)) * g1(m, j, s)
                + g1(i, j, (oo(i, m - 1) | {m}) | s)
                + (x(m - 1) - x(m)) * g1(i, j, oc(i, m) | s),
            )
    for q in range(i + 2, j):
        for s in _subsets(oo(q, j)):
            tag = f"i={i} q={q} j={j} S={sorted(s)}"
            rep.check(
                f"g2-qstep-a {tag}",
                g2(i, i, q, j, oc(i, q) | s),
                g1(q, j, s) + g2(i, i, q - 1, j, oc(i, q) | s),
            )
            rep.check(
                f"g2-qstep-b {tag}",
                g2(i, i + 1, q, j, oc(i, q) | s),
                g1(q, j, s) + g2(i, i + 1, q - 1, j, oc(i, q) | s),
            )
    for q in range(i + 3, j + 1):
        for m in range(i + 2, q):
            for s in _subsets(oc(m, j)):
                tag = f"i={i} m={m} q={q} j={j} S={sorted(s)}"
                rep.check(
                    f"g2-mid-a {tag}",
                    g2(i, i, q, j, oo(i, m) | s),
                    (x(m) - y(m)) * g2(m, m, q, j, s)
                    + g2(i, i, q, j, (oo(i, m - 1) | {m}) | s)
                    + (x(m - 1) - x(m)) * g2(i, i, q, j, oc(i, m) | s),
                )
                lhs = (x(m) - y(m)) * g2(m, m, q, j, s) + (
                    x(m - 1) - x(m)
                ) * g2(i, i + 1, q, j, oc(i, m) | s)
                if i + 1 < m - 1:
                    lhs = lhs + g2(i, i + 1, q, j, (oo(i, m - 1) | {m}) | s)
                rep.check(f"g2-mid-b {tag}", g2(i, i + 1, q, j, oo(i, m) | s), lhs)
                rep.check(
                    f"g2-mid-c {tag}",
                    g2(i, m, q, j, (oo(i, m - 1) | {m}) | s),
                    (x(i) - y(i + 1)) * g2(m, m, q, j, s),
                )
                if m + 1 in s and m + 1 <= q:
                    rep.check(
                        f"g2-mid-d {tag}",
                        g2(i, m + 1, q, j, oo(i, m) | s),
                        (x(i) - y(i + 1)) * g2(m, m + 1, q, j, s),
                    )
                for k in range(m + 2, q + 1):
                    rep.check(
                        f"g2-mid-e k={k} {tag}",
                        g2(i, k, q, j, oo(i, m) | s),
                        (x(i) - y(i + 1)) * g2(m, k, q, j, s)
                        + g2(i, k, q, j, (oo(i, m - 1) | {m}) | s)
                        + (x(m - 1) - x(m)) * g2(i, k, q, j, oc(i, m) | s),
                    )


def _ends_of(s: frozenset) -> list[frozenset]:
    items = sorted(s)
    return [frozenset(items[k:]) for k in range(len(items) + 1)]


def _injections(sources, targets, floor):
    sources = list(sources)
    if not sources:
        yield {}
        return
    t = sources[0]
    for img in targets:
        if img >= floor[t]:
            for rest in _injections(sources[1:], [u for u in targets if u != img], floor):
                yield {t: img, **rest}


def _lin_reduce_case(rep: VerdictReport, i, j, d, lvals, s, r, phi):
    l = LFunction(i + 1, j, lvals)
    if any(l(t) == 1 for t in r & d):
        return
    f = f_poly(i, j, d, l, s)
    subst = {}
    hit = False
    for t in sorted(r):
        # the hit interval is half-open: a divisor strictly below phi(t)
        span = set(range(t + l(t), phi[t])) & d
        if span:
            hit = True
            subst[phi[t]] = d_floor(d, i, phi[t])
        elif t != j:
            subst[phi[t]] = t
    reduced = lin_reduce(f, subst)
    tag = f"collapse i={i} j={j} D={sorted(d)} l={lvals} S={sorted(s)} R={sorted(r)} phi={phi}"
    if hit:
        rep.check(tag, Polynomial(), reduced)
    elif r == s:
        image = {phi[t] for t in s}
        prod = Polynomial.const(1)
        for t in range(i + 1, j + 1):
            if t not in image:
                prod = prod * (x(d_floor(d, i, t)) - y(t))
        rep.check(tag, lin_reduce(prod, subst), reduced)
    # an end R strictly smaller than S with no D-hits asserts nothing


def _lin_tuples(i: int, j: int):
    for d in _subsets(range(i + 1, j)):
        for lvals in product((0, 1), repeat=j - i):
            l = LFunction(i + 1, j, lvals)
            for s in _subsets(range(i + 1, j + 1)):
                for r in _ends_of(s):
                    floor = {t: t + l(t) for t in r}
                    for phi in _injections(sorted(r), list(range(i + 1, j + 1)), floor):
                        yield d, lvals, s, r, phi


def _lin_reduce_exhaustive(rep: VerdictReport, i: int, width: int):
    for w in range(1, width + 1):
        j = i + w
        for d, lvals, s, r, phi in _lin_tuples(i, j):
            _lin_reduce_case(rep, i, j, d, lvals, s, r, phi)


def _lin_reduce_sampled(rep: VerdictReport, rng: random.Random, i: int,
                        width: int, samples: int):
    j = i + width
    pool = list(range(i + 1, j + 1))
    done = 0
    attempts = 0
    while done < samples and attempts < samples * 40:
        attempts += 1
        d = frozenset(rng.sample(range(i + 1, j), rng.randint(0, width - 1)))
        lvals = tuple(rng.randint(0, 1) for _ in range(width))
        l = LFunction(i + 1, j, lvals)
        s = frozenset(rng.sample(pool, rng.randint(0, width)))
        ends = _ends_of(s)
        r = ends[rng.randrange(len(ends))]
        floor = {t: t + l(t) for t in r}
        injections = list(_injections(sorted(r), pool, floor))
        if not injections:
            continue
        phi = injections[rng.randrange(len(injections))]
        _lin_reduce_case(rep, i, j, d, lvals, s, r, phi)
        done += 1


# -- suite: raising oracle --------------------------------------------------------


def admissible_signed_sets(i: int, j: int) -> list[SignedSet]:
    """All-even and one-barred signed (i..j]-sets containing j or j barred."""
    univ = list(range(i + 1, j + 1))
    out = []
    for rest in _subsets([t for t in univ if t != j]):
        out.append(SignedSet.of(evens=set(rest) | {j}))
    for q in univ:
        for rest in _subsets([t for t in univ if t != q]):
            if q == j or j in rest:
                out.append(SignedSet.of(evens=rest, odds=[q]))
    return out


def _oracle_block(task) -> tuple[int, list]:
    """One signed set's worth of oracle comparisons (runs in a worker)."""
    kind, i, j, evens, odds, q = task
    m = SignedSet.of(evens=evens, odds=odds)
    w = j - i
    cases = 0
    failures = []
    for eps in (0, 1):
        for dv in product((0, 1), repeat=w):
            delta = DeltaFunction(i, dv)
            if kind == "oracle":
                a = raising_rec(i, j, eps, delta, m)
                b = raising_closed(i, j, eps, delta, m)
                cases += 1
                if a != b:
                    failures.append(
                        (
                            f"oracle i={i} j={j} eps={eps} d={dv}"
                            f" M=ev{sorted(evens)}od{sorted(odds)}",
                            str(b),
                            str(a),
                        )
                    )
            else:
                for xi in (0, 1):
                    lhs, rhs = two_term_sum_sides(i, j, q, eps, xi, delta, m)
                    cases += 1
                    if lhs != rhs:
                        failures.append(
                            (
                                f"two-term i={i} j={j} q={q} eps={eps} xi={xi} d={dv}"
                                f" N=ev{sorted(evens)}",
                                str(rhs),
                                str(lhs),
                            )
                        )
    return cases, failures


def _pmap(fn, tasks):
    threads = thread_count()
    if threads <= 1 or len(tasks) < 4:
        return [fn(t) for t in tasks]
    import multiprocessing

    with multiprocessing.Pool(threads) as pool:
        return pool.map(fn, tasks)


def verify_raising_oracle(width: int = 5, offsets=(1,)) -> VerdictReport:
    rep = VerdictReport("raising-oracle", {"width": width, "offsets": list(offsets)})
    tasks = []
    for i in offsets:
        for w in range(1, width + 1):
            j = i + w
            for m in admissible_signed_sets(i, j):
                tasks.append(
                    ("oracle", i, j, tuple(sorted(m.evens)), tuple(sorted(m.odds)), 0)
                )
            for q in range(i + 1, j + 1):
                for rest in _subsets([t for t in range(i + 1, j + 1) if t != q]):
                    if q == j or j in rest:
                        tasks.append(
                            ("432", i, j, tuple(sorted(rest)), (q,), q)
                        )
    for cases, failures in _pmap(_oracle_block, tasks):
        rep.cases += cases
        rep.failures.extend(failures)
    return rep.finish()


# -- suite: signature bridge -------------------------------------------------------


def verify_signature_bridge(ps=(3, 5, 7), max_n: int = 6, samples: int = 10000,
                            hi: int = 12, seed: int = 424242) -> VerdictReport:
    rep = VerdictReport("signature-bridge", {
        "ps": list(ps), "max_n": max_n, "samples": samples, "hi": hi, "seed": seed,
    })
    rng = random.Random(seed)
    for case in range(samples):
        p = ps[case % len(ps)]
        n = rng.randint(1, max_n)
        lam = random_dominant_p_strict(rng, p, n, hi)
        for beta in range(p):
            rep.check(
                f"bridge p={p} lam={lam.parts} beta={beta}",
                reduce_seq(product_of(r_beta(lam, beta))),
                cr.beta_signature(lam, beta, reduced=True),
            )
    return rep.finish()


# -- suite: duality ------------------------------------------------------------------


def verify_duality(ps=(3, 5, 7), max_n: int = 6, samples: int = 10000,
                   seed: int = 31337) -> VerdictReport:
    rep = VerdictReport("duality", {
        "ps": list(ps), "max_n": max_n, "samples": samples, "seed": seed,
    })
    rng = random.Random(seed)
    for case in range(samples):
        p = ps[case % len(ps)]
        n = rng.randint(1, max_n)
        lam = random_weight(rng, p, n)
        mw = lam.minus_w0()
        tag = f"p={p} lam={lam.parts}"
        for i in range(1, n + 1):
            beta = lam.residue(i)
            u = r_beta(lam, beta)
            full = reduce_seq(product_of(u))
            tail = reduce_seq(product_of(u, range(i, n + 1)))
            rep.check(
                f"tail-shortcut {tag} i={i}",
                any(s == MINUS and mk == i for s, mk in full),
                any(s == MINUS and mk == i for s, mk in tail),
            )
            if i < n and lam.entry(n) % p == 0:
                rep.check(
                    f"zero-boundary {tag} i={i}", ix.normal(lam, i), ix.tensor_normal(lam, i)
                )
            rep.check(
                f"conormal-dual {tag} i={i}",
                ix.tensor_conormal(lam, i),
                ix.tensor_normal(mw, n + 1 - i),
            )
            rep.check(
                f"cogood-dual {tag} i={i}",
                ix.tensor_good(lam, i),
                ix.tensor_cogood(mw, n + 1 - i),
            )
            rep.check(
                f"good-conormal {tag} i={i}",
                ix.tensor_good(lam, i),
                ix.tensor_normal(lam, i) and ix.tensor_conormal(lam.sub_eps(i), i),
            )
            rep.check(
                f"good-cogood {tag} i={i}",
                ix.tensor_good(lam, i),
                ix.tensor_cogood(lam.sub_eps(i), i),
            )
    return rep.finish()


# -- suite: certificates and planners ---------------------------------------------


def verify_certificates(ps=(3, 5, 7), max_n: int = 6, samples: int = 10000,
                        seed: int = 8128) -> VerdictReport:
    rep = VerdictReport("certificates", {
        "ps": list(ps), "max_n": max_n, "samples": samples, "seed": seed,
    })
    rng = random.Random(seed)
    for case in range(samples):
        p = ps[case % len(ps)]
        n = rng.randint(2, max_n)
        lam = random_weight(rng, p, n)
        tag = f"p={p} lam={lam.parts}"
        for i in range(1, n):
            if ix.normal(lam, i):
                plan = ix.primitive_plan(lam, i)
                rep.record(
                    f"plan {tag} i={i}", ix.validate_plan(lam, plan), plan.to_json()
                )
                try:
                    ix.non_normal_certificate(lam, i)
                    rep.record(f"cert-reject {tag} i={i}", False, "no error")
                except ix.IsNormal:
                    rep.record(f"cert-reject {tag} i={i}", True)
            else:
                cert = ix.non_normal_certificate(lam, i)
                rep.record(
                    f"cert {tag} i={i}",
                    ix.validate_certificate(lam, cert),
                    cert.to_json(),
                )
                try:
                    ix.primitive_plan(lam, i)
                    rep.record(f"plan-reject {tag} i={i}", False, "no error")
                except ix.NotNormal:
                    rep.record(f"plan-reject {tag} i={i}", True)
        for h in range(1, n - 1):
            if not ix.normal(lam, h):
                continue
            for i in range(h + 1, n):
                if lam.residue(h) == lam.residue(i):
                    plan = ix.extension_plan(lam, h, i)
                    rep.record(
                        f"extension {tag} h={h} i={i}",
                        ix.validate_plan(lam, plan),
                        plan.to_json(),
                    )
    return rep.finish()


def run_suite(name: str, **kwargs) -> VerdictReport:
    runners = {
        "reduction": verify_reduction,
        "flows": verify_flows,
        "poly-identities": verify_poly_identities,
        "raising-oracle": verify_raising_oracle,
        "signature-bridge": verify_signature_bridge,
        "duality": verify_duality,
        "certificates": verify_certificates,
    }
    if name not in runners:
        raise KeyError(name)
    return runners[name](**kwargs)
