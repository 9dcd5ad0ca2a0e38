"""Marked signature sequences, their canonical reduction, sign maps r_beta,
and the flow / bud / section / resolution combinatorics.

A marked signature sequence is a tuple of (sign, mark) pairs with sign in
{+1, -1}.  Reduction erases adjacent (-, +) pairs, whatever the marks; the
canonical algorithm is a single left-to-right pass with a pending stack,
which agrees with any erasure order (tested, not assumed).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import Weight, congruent, res_p

Entry = tuple[int, int]  # (sign, mark), sign in {+1, -1}
Seq = tuple[Entry, ...]

PLUS, MINUS = 1, -1

SINGLE_VALUES = ("", "-", "+")
PAIR_VALUES = ("", "--", "+-", "++")


class MarkOutOfRange(ValueError):
    pass


class NotAllMinus(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


def seq(*entries: Entry) -> Seq:
    return tuple(entries)


def reduce_seq(u: Seq) -> Seq:
    """The reduction [u]: erase adjacent -+ pairs until none remain.

    One pass, keeping a pending stack; on reading + with a pending -, both
    are dropped.  Surviving entries keep their order and marks, and the
    result has shape +^s -^r.
    """
    stack: list[Entry] = []
    for sign, mark in u:
        if sign == PLUS and stack and stack[-1][0] == MINUS:
            stack.pop()
        else:
            stack.append((sign, mark))
    return tuple(stack)


def reduce_random_order(u: Seq, rng) -> Seq:
    """Reduce by erasing randomly chosen adjacent -+ pairs (test oracle)."""
    work = list(u)
    while True:
        sites = [
            k
            for k in range(len(work) - 1)
            if work[k][0] == MINUS and work[k + 1][0] == PLUS
        ]
        if not sites:
            return tuple(work)
        k = rng.choice(sites)
        del work[k : k + 2]


def plus_count(u: Seq) -> int:
    return sum(1 for s, _ in u if s == PLUS)


def minus_count(u: Seq) -> int:
    return sum(1 for s, _ in u if s == MINUS)


def is_all_minus(u: Seq) -> bool:
    return plus_count(u) == 0


def signs(u: Seq) -> str:
    return "".join("+" if s == PLUS else "-" for s, _ in u)


def minus_w0_seq(u: Seq, n: int) -> Seq:
    """Swap signs, send mark i to n+1-i, and reverse the sequence."""
    for _, mark in u:
        if not 1 <= mark <= n:
            raise MarkOutOfRange(f"mark {mark} outside 1..{n}")
    return tuple((-s, n + 1 - m) for s, m in reversed(u))


def seq_to_json(u: Seq) -> str:
    return json.dumps([["+" if s == PLUS else "-", m] for s, m in u])


def seq_from_json(text: str) -> Seq:
    return tuple(
        (PLUS if s == "+" else MINUS, m) for s, m in json.loads(text)
    )


# -- sign maps ---------------------------------------------------------------


@dataclass(frozen=True)
class SignMap:
    """A map from a finite integer domain to short signature sequences.

    mode 'single' allows values '', '-', '+'; mode 'pair' allows '', '--',
    '+-', '++'.  Mixing modes is a construction error.
    """

    mode: str
    values: tuple[tuple[int, str], ...]

    def __post_init__(self):
        allowed = {"single": SINGLE_VALUES, "pair": PAIR_VALUES}.get(self.mode)
        if allowed is None:
            raise ValueError(f"unknown mode {self.mode!r}")
        pairs = tuple(sorted(dict(self.values).items()))
        for _, v in pairs:
            if v not in allowed:
                raise ValueError(f"value {v!r} not allowed in {self.mode} mode")
        object.__setattr__(self, "values", pairs)

    @staticmethod
    def make(mode: str, mapping: dict[int, str]) -> "SignMap":
        return SignMap(mode, tuple(mapping.items()))

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.values)

    def value(self, i: int) -> str:
        for k, v in self.values:
            if k == i:
                return v
        raise KeyError(i)

    def contains_minus(self, i: int) -> bool:
        return "-" in self.value(i)

    def contains_plus(self, i: int) -> bool:
        return "+" in self.value(i)

    def restrict(self, indices) -> "SignMap":
        keep = set(indices)
        return SignMap(self.mode, tuple((i, v) for i, v in self.values if i in keep))

    def to_json(self) -> str:
        return json.dumps(
            {"mode": self.mode, "values": {str(i): v for i, v in self.values}}
        )

    @staticmethod
    def from_json(text: str) -> "SignMap":
        data = json.loads(text)
        return SignMap.make(data["mode"], {int(k): v for k, v in data["values"].items()})


def product_of(u: SignMap, indices=None) -> Seq:
    """Concatenate u_j over j in increasing order, marking entries with j."""
    if indices is None:
        indices = u.domain
    else:
        dom = set(u.domain)
        indices = sorted(indices)
        for j in indices:
            if j not in dom:
                raise KeyError(f"{j} not in sign map domain")
    out: list[Entry] = []
    for j in sorted(indices):
        for ch in u.value(j):
            out.append((PLUS if ch == "+" else MINUS, j))
    return tuple(out)


def reduced_product(u: SignMap, indices=None) -> Seq:
    return reduce_seq(product_of(u, indices))


def r_beta(lam: Weight, beta: int) -> SignMap:
    """The sign map r_beta(lambda) on [1..n].

    beta = 0 gives the pair-mode map (--, +-, ++ at entries congruent to
    1, 0, -1 mod p); beta != 0 gives the single-mode map with - at entries
    of residue beta and + where the residue of (entry + 1) is beta.
    """
    p = lam.p
    vals: dict[int, str] = {}
    if (beta % p if p else beta) == 0:
        for i in range(1, lam.n + 1):
            x = lam.entry(i)
            if congruent(x, 1, p):
                vals[i] = "--"
            elif congruent(x, 0, p):
                vals[i] = "+-"
            elif congruent(x, -1, p):
                vals[i] = "++"
            else:
                vals[i] = ""
        return SignMap.make("pair", vals)
    for i in range(1, lam.n + 1):
        x = lam.entry(i)
        if res_p(x, p) == (beta % p if p else beta):
            vals[i] = "-"
        elif res_p(x + 1, p) == (beta % p if p else beta):
            vals[i] = "+"
        else:
            vals[i] = ""
    return SignMap.make("single", vals)


# -- flows -------------------------------------------------------------------


@dataclass(frozen=True)
class Flow:
    """A set of index pairs; validity/coherence is judged by flow_analyze."""

    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(
            self, "edges", frozenset((int(a), int(b)) for a, b in self.edges)
        )

    def sources(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.edges)

    def targets(self) -> frozenset[int]:
        return frozenset(b for _, b in self.edges)

    def union(self, other: "Flow") -> "Flow":
        return Flow(self.edges | other.edges)

    def target_of(self, a: int) -> int:
        for s, t in self.edges:
            if s == a:
                return t
        raise KeyError(a)

    def source_map(self) -> dict[int, int]:
        return {a: b for a, b in sorted(self.edges)}

    def to_json(self) -> str:
        return json.dumps({"edges": sorted([a, b] for a, b in self.edges)})

    @staticmethod
    def from_json(text: str) -> "Flow":
        return Flow(frozenset(tuple(e) for e in json.loads(text)["edges"]))


@dataclass(frozen=True)
class FlowReport:
    is_weak_flow: bool
    is_flow: bool
    coherent: bool
    fully_coherent: bool
    buds: frozenset[int]


def flow_analyze(g: Flow, u: SignMap) -> FlowReport:
    """Evaluate the flow, coherence and bud conditions of g against u."""
    dom = set(u.domain)
    edges = sorted(g.edges)
    srcs = [a for a, _ in edges]
    tgts = [b for _, b in edges]
    in_domain = all(a in dom and b in dom for a, b in edges)
    distinct = len(set(srcs)) == len(srcs) and len(set(tgts)) == len(tgts)
    weak = in_domain and distinct and all(a <= b for a, b in edges)
    strict = weak and all(a < b for a, b in edges)
    coherent = (
        all(u.contains_minus(a) for a in srcs)
        and all(u.contains_plus(b) for b in tgts)
    )
    target_set = set(tgts)
    fully = coherent and all(
        i in target_set for i in dom if u.contains_plus(i)
    )
    src_set = set(srcs)
    buds = frozenset(
        i for i in dom if u.contains_minus(i) and i not in src_set
    )
    return FlowReport(weak, strict, coherent, fully, buds)


def _buds_of(edges: set[tuple[int, int]], u: SignMap, indices) -> list[int]:
    srcs = {a for a, _ in edges}
    return [i for i in sorted(indices) if u.contains_minus(i) and i not in srcs]


def build_full_flow(u: SignMap) -> Flow:
    """A flow fully coherent with u, given [prod u] = -^m.

    Single mode: the erasure-trace construction (each erased -+ pair is an
    edge); bud count m.  Pair mode: recursion on max of the domain, joining
    the maximal available bud to the new index; bud count m/2.
    """
    if not is_all_minus(reduced_product(u)):
        raise NotAllMinus(f"[prod u] = {signs(reduced_product(u))} contains a +")
    if u.mode == "single":
        edges: set[tuple[int, int]] = set()
        stack: list[tuple[int, int]] = []  # (sign, index)
        for sign, mark in product_of(u):
            if sign == PLUS and stack and stack[-1][0] == MINUS:
                a = stack.pop()[1]
                edges.add((a, mark))
            else:
                stack.append((sign, mark))
        return Flow(frozenset(edges))

    def rec(idxs: list[int]) -> set[tuple[int, int]]:
        if not idxs:
            return set()
        e = idxs[-1]
        rest = idxs[:-1]
        edges = rec(rest)
        v = u.value(e)
        if v in ("", "--"):
            return edges
        # +- or ++: cover the new + with an edge from the maximal bud
        buds = _buds_of(edges, u, rest)
        if not buds:
            raise AssertionError("no bud available; precondition violated")
        edges.add((buds[-1], e))
        return edges

    return Flow(frozenset(rec(sorted(u.domain))))


def split_index(u: SignMap) -> int:
    """The pair-mode index a with u_a = --, [prod over (a..)] in {empty, +-}
    and [prod over (-inf..a]] = -^m, for [prod u] = -^m with m > 0."""
    if u.mode != "pair":
        raise PreconditionFailed("split_index needs a pair-mode map")
    red = reduced_product(u)
    if not is_all_minus(red) or not red:
        raise PreconditionFailed(f"[prod u] = {signs(red)} is not -^m with m > 0")

    def rec(idxs: list[int]) -> int:
        e = idxs[-1]
        rest = idxs[:-1]
        v = u.value(e)
        if v == "":
            return rec(rest)
        if v == "--":
            return e
        if v == "+-":
            return rec(rest)
        # v == '++': locate b in the prefix, then recurse strictly below b
        b = rec(rest)
        return rec([i for i in idxs if i < b])

    return rec(sorted(u.domain))


def lead_plus_index(u: SignMap) -> int:
    """The pair-mode index a with u_a = +- and empty reduction before it,
    for [prod u] = +-^m."""
    if u.mode != "pair":
        raise PreconditionFailed("lead_plus_index needs a pair-mode map")
    red = reduced_product(u)
    if plus_count(red) != 1 or not red or red[0][0] != PLUS:
        raise PreconditionFailed(f"[prod u] = {signs(red)} is not +-^m")

    def rec(idxs: list[int]) -> int:
        e = idxs[-1]
        rest = idxs[:-1]
        s = plus_count(reduce_seq(product_of(u, rest)))
        if s == 1:
            return rec(rest)
        assert s == 0 and u.value(e) == "+-"
        return e

    return rec(sorted(u.domain))


def section_of(u: SignMap) -> tuple[int, ...]:
    """A section a_1 < ... < a_h of u (pair mode, [prod u] = +-^m):
    every u_{a_k} = +-, the gaps between them reduce to empty, and the tail
    after a_h reduces to -^(m-1)."""
    a = lead_plus_index(u)
    tail = [i for i in u.domain if i > a]
    if plus_count(reduce_seq(product_of(u, tail))) == 0:
        return (a,)
    return (a,) + section_of(u.restrict(tail))


def resolution_of(u: SignMap) -> Flow:
    """The weak flow built from a section: loops at the section indices plus
    fully coherent flows on the complementary stretches."""
    sec = section_of(u)
    edges: set[tuple[int, int]] = {(a, a) for a in sec}
    bounds = (float("-inf"),) + sec + (float("inf"),)
    for lo, hi in zip(bounds, bounds[1:]):
        gap = [i for i in u.domain if lo < i < hi]
        edges |= set(build_full_flow(u.restrict(gap)).edges)
    return Flow(frozenset(edges))


def partial_flow(u: SignMap) -> tuple[tuple[int, ...], Flow]:
    """A beginning J of the domain with [prod over J] = + (single mode) or
    ++ (pair mode), and a flow on J coherent but not fully coherent with
    u restricted to J, having no buds there."""
    red = reduced_product(u)
    need = 1 if u.mode == "single" else 2
    if plus_count(red) < need:
        raise PreconditionFailed(
            f"[prod u] = {signs(red)} has fewer than {need} plus signs"
        )

    def rec_single(idxs: list[int]) -> tuple[list[int], set[tuple[int, int]]]:
        if len(idxs) == 1:
            return idxs, set()
        rest = idxs[:-1]
        if plus_count(reduce_seq(product_of(u, rest))) > 0:
            return rec_single(rest)
        return idxs, set(build_full_flow(u.restrict(rest)).edges)

    def rec_pair(idxs: list[int]) -> tuple[list[int], set[tuple[int, int]]]:
        if len(idxs) == 1:
            return idxs, set()
        e = idxs[-1]
        rest = idxs[:-1]
        s = plus_count(reduce_seq(product_of(u, rest)))
        if s > 1:
            return rec_pair(rest)
        if s == 0:
            return idxs, set(build_full_flow(u.restrict(rest)).edges)
        # s == 1: join the section of the prefix and end at e
        sec = section_of(u.restrict(rest))
        edges = set(zip(sec, sec[1:] + (e,)))
        bounds = (float("-inf"),) + sec + (float("inf"),)
        for lo, hi in zip(bounds, bounds[1:]):
            gap = [i for i in rest if lo < i < hi]
            edges |= set(build_full_flow(u.restrict(gap)).edges)
        return idxs, edges

    rec = rec_single if u.mode == "single" else rec_pair
    j, edges = rec(sorted(u.domain))
    return tuple(j), Flow(frozenset(edges))
