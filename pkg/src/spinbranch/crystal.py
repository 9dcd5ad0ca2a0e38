"""Partition-level combinatorics: contents, removable/addable nodes in both
the partition and the weight conventions, signatures, crystal operators,
the colored crystal graph, spin statistics and branching tables.

Nodes are (row, column) pairs, rows starting at 1.  Signatures are read
row by row, larger column first within a row.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .core import Weight, check_characteristic, ell_of, res_p
from .sigseq import MINUS, PLUS, Seq, reduce_seq

Node = tuple[int, int]


class NotDominantPStrict(ValueError):
    pass


class NotRestricted(ValueError):
    pass


def cont_p(col: int, p: int) -> int:
    """Content of a column: the folded pattern 0,1,...,l,...,1,0 of period p
    (unfolded 0,1,2,... when p = 0)."""
    if col < 1:
        raise ValueError("columns start at 1")
    if p == 0:
        return col - 1
    m = (col - 1) % p
    ell = (p - 1) // 2
    return m if m <= ell else p - 1 - m


def beta_of_content(i: int, p: int) -> int:
    """The residue attached to content i: i^2 + i mod p."""
    v = i * i + i
    return v % p if p else v


def _is_p_strict_parts(parts: tuple[int, ...], p: int) -> bool:
    if any(x < 0 for x in parts):
        return False
    if any(a < b for a, b in zip(parts, parts[1:])):
        return False
    for a, b in zip(parts, parts[1:]):
        if a == b and a > 0 and (p == 0 or a % p != 0):
            return False
    return True


def _is_restricted_parts(parts: tuple[int, ...], p: int) -> bool:
    if not _is_p_strict_parts(parts, p):
        return False
    if p == 0:
        return True
    padded = parts + (0,)
    for a, b in zip(padded, padded[1:]):
        if a % p == 0:
            if a - b >= p:
                return False
        elif a - b > p:
            return False
    return True


@dataclass(frozen=True)
class PStrictPartition:
    """A p-strict partition: weakly decreasing positive parts, where equal
    adjacent parts must be divisible by p."""

    parts: tuple[int, ...]
    p: int

    def __post_init__(self):
        check_characteristic(self.p)
        parts = tuple(int(x) for x in self.parts if x != 0)
        object.__setattr__(self, "parts", parts)
        if not _is_p_strict_parts(parts, self.p):
            raise ValueError(f"{parts} is not {self.p}-strict")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def part(self, r: int) -> int:
        """Row length, 0 beyond the last row."""
        return self.parts[r - 1] if 1 <= r <= len(self.parts) else 0

    def is_restricted(self) -> bool:
        return _is_restricted_parts(self.parts, self.p)

    def remove(self, node: Node) -> "PStrictPartition":
        r, c = node
        if self.part(r) != c:
            raise ValueError(f"{node} is not a rim node")
        parts = list(self.parts)
        parts[r - 1] -= 1
        return PStrictPartition(tuple(parts), self.p)

    def add(self, node: Node) -> "PStrictPartition":
        r, c = node
        if self.part(r) + 1 != c:
            raise ValueError(f"{node} does not extend row {r}")
        parts = list(self.parts) + [0] * (r - len(self.parts))
        parts[r - 1] += 1
        return PStrictPartition(tuple(parts), self.p)

    def pad_weight(self) -> Weight:
        """The partition as a dominant weight with one trailing zero part."""
        return Weight(self.parts + (0,), self.p)

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "parts": list(self.parts)})


def _try_parts(parts: list[int], p: int) -> bool:
    return _is_p_strict_parts(tuple(parts), p)


def rim_nodes(lam: PStrictPartition, i: int) -> tuple[list[Node], list[Node]]:
    """All i-removable and i-addable nodes, each read off the rim top right
    to bottom left (rows ascending, columns descending within a row).

    Removable nodes come from the rim rule or from the left member of an
    equal-content pair whose double removal stays p-strict; addable nodes
    dually.
    """
    signed = _rim_signed_nodes(lam, i)
    removable = [node for sign, node in signed if sign == MINUS]
    addable = [node for sign, node in signed if sign == PLUS]
    return removable, addable


def _rim_signed_nodes(lam: PStrictPartition, i: int):
    p = lam.p
    out: list[tuple[int, Node]] = []
    for r in range(1, lam.rows + 2):
        lr = lam.part(r)
        base = list(lam.parts) + [0] * max(r - lam.rows, 0)
        one = base.copy()
        one[r - 1] += 1
        two = base.copy()
        two[r - 1] += 2
        row: list[tuple[int, Node]] = []
        # addable (r, lr+2) via the pair rule
        if (
            cont_p(lr + 2, p) == i
            and cont_p(lr + 1, p) == i
            and _try_parts(one, p)
            and _try_parts(two, p)
        ):
            row.append((PLUS, (r, lr + 2)))
        # addable (r, lr+1) directly
        if cont_p(lr + 1, p) == i and _try_parts(one, p):
            row.append((PLUS, (r, lr + 1)))
        if r <= lam.rows:
            # removable (r, lr) directly
            if lr >= 1 and cont_p(lr, p) == i:
                one = list(lam.parts)
                one[r - 1] -= 1
                if _try_parts(one, p):
                    row.append((MINUS, (r, lr)))
            # removable (r, lr-1) via the pair rule
            if (
                lr >= 2
                and cont_p(lr - 1, p) == i
                and cont_p(lr, p) == i
            ):
                one = list(lam.parts)
                one[r - 1] -= 1
                two = list(lam.parts)
                two[r - 1] -= 2
                if _try_parts(one, p) and _try_parts(two, p):
                    row.append((MINUS, (r, lr - 1)))
        out.extend(row)
    return out


def rim_signature(lam: PStrictPartition, i: int, reduced: bool = False) -> Seq:
    """The i-signature (marks = rows), optionally reduced."""
    raw = tuple((sign, node[0]) for sign, node in _rim_signed_nodes(lam, i))
    return reduce_seq(raw) if reduced else raw


def e_tilde(i: int, lam: PStrictPartition) -> PStrictPartition | None:
    """Remove the i-good node (top minus of the reduced i-signature)."""
    red = reduce_seq(tuple(_rim_signed_nodes(lam, i)))
    for sign, node in red:
        if sign == MINUS:
            return lam.remove(node)
    return None


def f_tilde(i: int, lam: PStrictPartition) -> PStrictPartition | None:
    """Add the i-cogood node (bottom plus of the reduced i-signature)."""
    red = reduce_seq(tuple(_rim_signed_nodes(lam, i)))
    for sign, node in reversed(red):
        if sign == PLUS:
            return lam.add(node)
    return None


def good_nodes(lam: PStrictPartition, i: int) -> list[Node]:
    red = reduce_seq(tuple(_rim_signed_nodes(lam, i)))
    minuses = [node for sign, node in red if sign == MINUS]
    return minuses[:1]


def normal_nodes(lam: PStrictPartition, i: int) -> list[Node]:
    red = reduce_seq(tuple(_rim_signed_nodes(lam, i)))
    return [node for sign, node in red if sign == MINUS]


def conormal_nodes(lam: PStrictPartition, i: int) -> list[Node]:
    red = reduce_seq(tuple(_rim_signed_nodes(lam, i)))
    return [node for sign, node in red if sign == PLUS]


def cogood_nodes(lam: PStrictPartition, i: int) -> list[Node]:
    pluses = conormal_nodes(lam, i)
    return pluses[-1:]


# -- weight-diagram nodes (columns may be <= 0) -------------------------------


def _weight_ok(parts: list[int], p: int) -> bool:
    w = Weight(tuple(parts), p)
    return w.is_p_strict()


def body_signed_nodes(lam: Weight, beta: int):
    """Signed beta-removable/addable nodes of a dominant p-strict weight, in
    reading order.  Only columns within 2 of a row end can carry a sign."""
    if not lam.is_p_strict():
        raise NotDominantPStrict(f"{lam.parts} is not dominant p-strict")
    p = lam.p
    beta = beta % p if p else beta
    out: list[tuple[int, Node]] = []
    for r in range(1, lam.n + 1):
        lr = lam.entry(r)
        base = list(lam.parts)

        def changed(delta: int) -> bool:
            parts = base.copy()
            parts[r - 1] += delta
            return _weight_ok(parts, p)

        # addable (r, lr+2) via the pair rule
        if (
            res_p(lr + 2, p) == beta
            and res_p(lr + 1, p) == res_p(lr + 2, p)
            and changed(1)
            and changed(2)
        ):
            out.append((PLUS, (r, lr + 2)))
        # addable (r, lr+1)
        if res_p(lr + 1, p) == beta and changed(1):
            out.append((PLUS, (r, lr + 1)))
        # removable (r, lr)
        if res_p(lr, p) == beta and changed(-1):
            out.append((MINUS, (r, lr)))
        # removable (r, lr-1) via the pair rule
        if (
            res_p(lr - 1, p) == beta
            and res_p(lr, p) == res_p(lr - 1, p)
            and changed(-1)
            and changed(-2)
        ):
            out.append((MINUS, (r, lr - 1)))
    return out


def body_nodes(lam: Weight, beta: int) -> tuple[list[Node], list[Node]]:
    signed = body_signed_nodes(lam, beta)
    removable = [node for sign, node in signed if sign == MINUS]
    addable = [node for sign, node in signed if sign == PLUS]
    return removable, addable


def beta_signature(lam: Weight, beta: int, reduced: bool = False) -> Seq:
    """The beta-signature of a dominant p-strict weight (marks = rows)."""
    raw = tuple((sign, node[0]) for sign, node in body_signed_nodes(lam, beta))
    return reduce_seq(raw) if reduced else raw


# -- statistics and tables ----------------------------------------------------


def contents_for(p: int, max_col: int) -> range:
    """All contents that can occur in columns 1..max_col."""
    if p == 0:
        return range(0, max(max_col, 1))
    return range(0, ell_of(p) + 1)


def spin_stats(lam: PStrictPartition):
    """(number of parts prime to p, type 'M'/'Q', content counts)."""
    p = lam.p
    if p == 0:
        h = sum(1 for x in lam.parts if x != 0)
    else:
        h = sum(1 for x in lam.parts if x % p != 0)
    kind = "M" if h % 2 == 0 else "Q"
    width = max([0] + list(lam.parts))
    gamma = [0] * len(contents_for(p, max(width, 1)))
    for row_len in lam.parts:
        for c in range(1, row_len + 1):
            gamma[cont_p(c, p)] += 1
    return h, kind, tuple(gamma)


def branching_tables(lam: PStrictPartition):
    """Socle and Specht branching data for restriction and induction.

    Socle rows use good/cogood nodes; Specht rows use all normal/conormal
    nodes whose single-node removal/addition exists and stays restricted.
    """
    if not lam.is_restricted():
        raise NotRestricted(f"{lam.parts} is not restricted")
    p = lam.p
    max_col = max([0] + [x + 2 for x in lam.parts]) + 1
    restriction_socle = []
    restriction_specht = []
    induction_socle = []
    induction_specht = []
    for i in contents_for(p, max_col):
        for node in good_nodes(lam, i):
            mu = lam.remove(node)
            assert mu.is_restricted()
            restriction_socle.append((mu, node))
        for node in normal_nodes(lam, i):
            if lam.part(node[0]) != node[1]:
                continue  # a pair-rule node: single removal is not a partition
            mu = lam.remove(node)
            if mu.is_restricted():
                restriction_specht.append((mu, node))
        for node in cogood_nodes(lam, i):
            mu = lam.add(node)
            assert mu.is_restricted()
            induction_socle.append((mu, node))
        for node in conormal_nodes(lam, i):
            if lam.part(node[0]) + 1 != node[1]:
                continue
            mu = lam.add(node)
            if mu.is_restricted():
                induction_specht.append((mu, node))
    return restriction_socle, restriction_specht, induction_socle, induction_specht


# -- enumeration and the graph --------------------------------------------------


def partitions_of(n: int):
    """All integer partitions of n as weakly decreasing tuples."""

    def gen(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - first, first, prefix + (first,))

    yield from gen(n, n, ())


def restricted_partitions(p: int, n: int) -> list[PStrictPartition]:
    out = []
    for parts in partitions_of(n):
        if _is_restricted_parts(parts, p):
            out.append(PStrictPartition(parts, p))
    return out


@dataclass(frozen=True)
class CrystalGraph:
    """The I-colored graph on restricted p-strict partitions of size <= N,
    with an i-edge from e_tilde(i, mu) to mu."""

    p: int
    max_size: int
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[tuple[int, ...], int, tuple[int, ...]], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "max_size": self.max_size,
                "vertices": [list(v) for v in self.vertices],
                "edges": [[list(a), i, list(b)] for a, i, b in self.edges],
            }
        )

    def to_dot(self) -> str:
        def name(parts):
            return "(" + ",".join(map(str, parts)) + ")" if parts else "()"

        lines = ["digraph crystal {"]
        for v in self.vertices:
            lines.append(f'  "{name(v)}";')
        for a, i, b in self.edges:
            lines.append(f'  "{name(a)}" -> "{name(b)}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def crystal_graph(p: int, max_size: int) -> CrystalGraph:
    check_characteristic(p)
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    vertices: list[PStrictPartition] = []
    for n in range(max_size + 1):
        vertices.extend(restricted_partitions(p, n))
    vertices.sort(key=lambda lam: (lam.size, lam.parts))
    edges = []
    for mu in vertices:
        if mu.size == 0:
            continue
        for i in contents_for(p, max([0] + list(mu.parts))):
            lam = e_tilde(i, mu)
            if lam is not None:
                edges.append((lam.parts, i, mu.parts))
    edges.sort()
    return CrystalGraph(
        p, max_size, tuple(v.parts for v in vertices), tuple(edges)
    )
