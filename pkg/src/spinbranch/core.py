"""Shared vocabulary: residues mod p, integer weights, signed sets, segments.

The characteristic p is an odd prime or 0.  For p > 0 residues live in
{0, ..., p-1}; for p = 0 they are plain integers, so residue comparisons
still make sense everywhere.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

MINUS_INFINITY = float("-inf")

_SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


class InvalidCharacteristic(ValueError):
    pass


class InvalidReplace(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def check_characteristic(p: int) -> int:
    """Validate p = 0 or an odd prime and return it."""
    if p == 0:
        return p
    if p >= 3 and p % 2 == 1 and _is_prime(p):
        return p
    raise InvalidCharacteristic(f"characteristic must be 0 or an odd prime, got {p}")


def ell_of(p: int) -> int | None:
    """Number of distinct nonzero contents: (p-1)/2, or None when p = 0."""
    return None if p == 0 else (p - 1) // 2


def res_p(j: int, p: int) -> int:
    """Residue of the integer j: j(j-1) reduced mod p (exact when p = 0)."""
    v = j * (j - 1)
    return v % p if p > 0 else v


def congruent(a: int, b: int, p: int) -> bool:
    """a = b mod p, with mod 0 meaning equality."""
    return (a - b) % p == 0 if p > 0 else a == b


@dataclass(frozen=True)
class Weight:
    """An integer vector (lambda_1, ..., lambda_n) with its characteristic p."""

    parts: tuple[int, ...]
    p: int

    def __post_init__(self):
        check_characteristic(self.p)
        if len(self.parts) < 1:
            raise ValueError("a weight needs at least one entry")
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))

    @property
    def n(self) -> int:
        return len(self.parts)

    def entry(self, i: int) -> int:
        """1-based access: entry(1) = lambda_1."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range 1..{self.n}")
        return self.parts[i - 1]

    def residue(self, i: int) -> int:
        return res_p(self.entry(i), self.p)

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def is_p_strict(self) -> bool:
        """Dominant, and equal adjacent entries are divisible by p."""
        if not self.is_dominant():
            return False
        for a, b in zip(self.parts, self.parts[1:]):
            if a == b and not congruent(a, 0, self.p):
                return False
        return True

    def minus_w0(self) -> "Weight":
        """(-lambda_n, ..., -lambda_1)."""
        return Weight(tuple(-x for x in reversed(self.parts)), self.p)

    def sub_eps(self, i: int) -> "Weight":
        parts = list(self.parts)
        parts[i - 1] -= 1
        return Weight(tuple(parts), self.p)

    def add_eps(self, i: int) -> "Weight":
        parts = list(self.parts)
        parts[i - 1] += 1
        return Weight(tuple(parts), self.p)

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "parts": list(self.parts)})

    @staticmethod
    def from_json(text: str) -> "Weight":
        data = json.loads(text)
        return Weight(tuple(data["parts"]), data["p"])


def _order_key(value: int, barred: bool) -> tuple[int, int]:
    # barred-before-unbarred at equal absolute value; never exercised by the
    # recursions (a signed set holds at most one of k, kbar) but keeps the
    # order total.
    return (value, 0 if barred else 1)


@dataclass(frozen=True)
class SignedSet:
    """A finite set of integers, each carried unbarred (even) or barred (odd).

    No integer may appear in both roles.  Elements are compared by
    nbar < m, n < mbar, nbar < mbar whenever n < m.
    """

    evens: frozenset[int] = field(default_factory=frozenset)
    odds: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "evens", frozenset(self.evens))
        object.__setattr__(self, "odds", frozenset(self.odds))
        clash = self.evens & self.odds
        if clash:
            raise ValueError(f"{sorted(clash)} appear both barred and unbarred")

    # -- basic queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.evens or self.odds)

    def __len__(self) -> int:
        return len(self.evens) + len(self.odds)

    def elements(self) -> list[tuple[int, bool]]:
        """All (value, barred) pairs in increasing signed order."""
        items = [(v, False) for v in self.evens] + [(v, True) for v in self.odds]
        return sorted(items, key=lambda e: _order_key(*e))

    def support(self) -> frozenset[int]:
        """Absolute values (underlying integers) of all elements."""
        return self.evens | self.odds

    def ht(self):
        """Sum of the underlying integers; -infinity for the empty set."""
        if not self:
            return MINUS_INFINITY
        return sum(self.evens) + sum(self.odds)

    def parity(self) -> int:
        return len(self.odds) % 2

    def min(self) -> tuple[int, bool] | None:
        els = self.elements()
        return els[0] if els else None

    def max(self) -> tuple[int, bool] | None:
        els = self.elements()
        return els[-1] if els else None

    def min_value(self) -> int | None:
        m = self.min()
        return None if m is None else m[0]

    def contains_even(self, v: int) -> bool:
        return v in self.evens

    def contains_odd(self, v: int) -> bool:
        return v in self.odds

    def is_signed_subset_of(self, values) -> bool:
        """True when every absolute value lies in `values`."""
        vals = set(values)
        return all(v in vals for v in self.support())

    # -- transformations ----------------------------------------------------

    def union(self, other: "SignedSet") -> "SignedSet":
        return SignedSet(self.evens | other.evens, self.odds | other.odds)

    def difference(self, other: "SignedSet") -> "SignedSet":
        # plain set difference inside Z u Zbar: only equal-role elements cancel
        return SignedSet(self.evens - other.evens, self.odds - other.odds)

    def restrict(self, values) -> "SignedSet":
        """Keep the elements whose absolute value lies in `values`."""
        vals = set(values)
        return SignedSet(
            frozenset(v for v in self.evens if v in vals),
            frozenset(v for v in self.odds if v in vals),
        )

    def replace(self, old: tuple[int, bool], new: tuple[int, bool]) -> "SignedSet":
        """M with one element rewritten: old must be present, new must fit."""
        ov, obar = old
        nv, nbar = new
        if obar and not self.contains_odd(ov) or (not obar and not self.contains_even(ov)):
            raise InvalidReplace(f"{old} not in signed set")
        evens = set(self.evens)
        odds = set(self.odds)
        (odds if obar else evens).remove(ov)
        if nv in evens or nv in odds:
            raise InvalidReplace(f"replacement {new} collides with an existing element")
        (odds if nbar else evens).add(nv)
        return SignedSet(frozenset(evens), frozenset(odds))

    def remove(self, el: tuple[int, bool]) -> "SignedSet":
        v, barred = el
        if barred:
            if not self.contains_odd(v):
                raise KeyError(el)
            return SignedSet(self.evens, self.odds - {v})
        if not self.contains_even(v):
            raise KeyError(el)
        return SignedSet(self.evens - {v}, self.odds)

    def to_json(self) -> str:
        return json.dumps({"even": sorted(self.evens), "odd": sorted(self.odds)})

    @staticmethod
    def from_json(text: str) -> "SignedSet":
        data = json.loads(text)
        return SignedSet(frozenset(data["even"]), frozenset(data["odd"]))

    @staticmethod
    def of(evens=(), odds=()) -> "SignedSet":
        return SignedSet(frozenset(evens), frozenset(odds))


def signed_measure(m: SignedSet):
    """(height, parity, min, max) of a signed set in one call."""
    return m.ht(), m.parity(), m.min(), m.max()


# -- segment notation -------------------------------------------------------
# (a..b] etc. as concrete integer ranges; used pervasively downstream.


def seg_oo(a: int, b: int) -> range:
    """(a..b) = {a+1, ..., b-1}"""
    return range(a + 1, b)


def seg_oc(a: int, b: int) -> range:
    """(a..b] = {a+1, ..., b}"""
    return range(a + 1, b + 1)


def seg_co(a: int, b: int) -> range:
    """[a..b) = {a, ..., b-1}"""
    return range(a, b)


def seg_cc(a: int, b: int) -> range:
    """[a..b] = {a, ..., b}"""
    return range(a, b + 1)
