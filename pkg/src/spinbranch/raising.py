"""Normal-form arithmetic in the degree-zero algebra (central H-part,
anticommuting barred generators), the bracket substitution into it, the
raising-coefficient recursion, and its closed forms.

A degree-zero element maps each sorted tuple of barred indices to an exact
integer polynomial in H_1..H_n.  Barred generators square to the matching
H and anticommute pairwise; the H's are central.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import SignedSet, Weight, res_p
from .poly import Polynomial

Bars = tuple[int, ...]


class IndexOutOfRange(ValueError):
    pass


class BadSignedSet(ValueError):
    pass


class UnsupportedShape(ValueError):
    pass


class CharacteristicZero(ValueError):
    pass


def H(i: int) -> Polynomial:
    return Polynomial.var("H", i)


class U0Element:
    """Element of the degree-zero algebra in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Bars, Polynomial] | None = None):
        self.terms = {
            bars: coeff
            for bars, coeff in (terms or {}).items()
            if not coeff.is_zero()
        }

    @staticmethod
    def zero() -> "U0Element":
        return U0Element()

    @staticmethod
    def from_poly(coeff: Polynomial, bars: Bars = ()) -> "U0Element":
        return U0Element({tuple(bars): coeff})

    @staticmethod
    def const(c: int) -> "U0Element":
        return U0Element.from_poly(Polynomial.const(c))

    def __add__(self, other: "U0Element") -> "U0Element":
        terms = dict(self.terms)
        for bars, coeff in other.terms.items():
            terms[bars] = terms.get(bars, Polynomial()) + coeff
        return U0Element(terms)

    def __neg__(self) -> "U0Element":
        return U0Element({b: -c for b, c in self.terms.items()})

    def __sub__(self, other: "U0Element") -> "U0Element":
        return self + (-other)

    def scale(self, factor: Polynomial | int) -> "U0Element":
        factor = factor if isinstance(factor, Polynomial) else Polynomial.const(factor)
        return U0Element({b: c * factor for b, c in self.terms.items()})

    def __mul__(self, other: "U0Element") -> "U0Element":
        out: dict[Bars, Polynomial] = {}
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                sign, bars, extra = _normal_order(b1 + b2)
                coeff = c1 * c2 * extra * sign
                out[bars] = out.get(bars, Polynomial()) + coeff
        return U0Element(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, U0Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((b, hash(c)) for b, c in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def parities(self) -> set[int]:
        return {len(b) % 2 for b in self.terms}

    def __str__(self) -> str:
        return format_u0(self)

    __repr__ = __str__

    def to_json(self):
        from .poly import format_poly

        return [
            {"bars": list(bars), "coeff": format_poly(coeff)}
            for bars, coeff in sorted(self.terms.items())
        ]


def _normal_order(bars: Bars) -> tuple[int, Bars, Polynomial]:
    """Sort a word of barred generators.

    Distinct generators anticommute (one sign per transposition); adjacent
    equal generators merge into the matching central H.
    """
    word = list(bars)
    sign = 1
    extra = Polynomial.const(1)
    # insertion sort with sign tracking
    k = 1
    while k < len(word):
        m = k
        while m > 0 and word[m - 1] > word[m]:
            word[m - 1], word[m] = word[m], word[m - 1]
            sign = -sign
            m -= 1
        k += 1
    # collapse equal neighbours
    out: list[int] = []
    k = 0
    while k < len(word):
        if k + 1 < len(word) and word[k] == word[k + 1]:
            extra = extra * H(word[k])
            k += 2
        else:
            out.append(word[k])
            k += 1
    return sign, tuple(out), extra


def format_u0(u: U0Element) -> str:
    from .poly import format_poly

    if u.is_zero():
        return "0"
    bits = []
    for bars, coeff in sorted(u.terms.items(), key=lambda t: (len(t[0]), t[0])):
        text = format_poly(coeff)
        if len(coeff.terms) > 1:
            text = f"({text})"
        factors = [f"Hb{i}" for i in bars]
        bits.append("*".join(([text] if text != "1" or not factors else []) + factors))
    return " + ".join(bits)


# -- named elements ------------------------------------------------------------


def u0_h(i: int, n: int | None = None) -> U0Element:
    _check_index(i, n)
    return U0Element.from_poly(H(i))


def u0_hbar(i: int, n: int | None = None) -> U0Element:
    _check_index(i, n)
    return U0Element.from_poly(Polynomial.const(1), (i,))


def u0_h_eps(i: int, eps: int, n: int | None = None) -> U0Element:
    return u0_hbar(i, n) if eps % 2 else u0_h(i, n)


def u0_c(i: int, j: int, n: int | None = None) -> U0Element:
    """H_i(H_i - 1) - H_j(H_j - 1)."""
    _check_index(i, n)
    _check_index(j, n)
    return U0Element.from_poly(H(i) * (H(i) - 1) - H(j) * (H(j) - 1))


def u0_b(i: int, j: int, n: int | None = None) -> U0Element:
    """H_i(H_i - 1) - (H_j + 1)H_j."""
    _check_index(i, n)
    _check_index(j, n)
    return U0Element.from_poly(H(i) * (H(i) - 1) - (H(j) + 1) * H(j))


def _check_index(i: int, n: int | None):
    if i < 1 or (n is not None and i > n):
        raise IndexOutOfRange(f"index {i} outside 1..{n}")


def bracket_hom(f: Polynomial) -> U0Element:
    """The ring homomorphism x_i -> H_i(H_i - 1), y_i -> (H_i + 1)H_i."""
    assignment = {}
    for axis, idx in f.variables():
        if axis == "x":
            assignment[(axis, idx)] = H(idx) * (H(idx) - 1)
        elif axis == "y":
            assignment[(axis, idx)] = (H(idx) + 1) * H(idx)
        else:
            raise IndexOutOfRange(f"bracket undefined on axis {axis!r}")
    return U0Element.from_poly(f.substitute(assignment))


# -- delta functions -----------------------------------------------------------


@dataclass(frozen=True)
class DeltaFunction:
    """A {0,1}-valued function on [lo..hi]; for a raising coefficient at
    (i, j) the domain is [i..j-1]."""

    lo: int
    values: tuple[int, ...]

    def __post_init__(self):
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("delta values must be 0 or 1")

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __call__(self, t: int) -> int:
        if not self.lo <= t <= self.hi:
            raise KeyError(f"{t} outside [{self.lo}..{self.hi}]")
        return self.values[t - self.lo]

    def total(self) -> int:
        return sum(self.values) % 2

    def sum_range(self, a: int, b: int) -> int:
        """delta_a + ... + delta_{b-1} mod 2 (empty when a >= b)."""
        return sum(self(t) for t in range(a, b)) % 2

    def restrict(self, lo: int, hi: int) -> "DeltaFunction":
        return DeltaFunction(lo, tuple(self(t) for t in range(lo, hi + 1)))

    def with_value(self, t: int, v: int) -> "DeltaFunction":
        vals = list(self.values)
        vals[t - self.lo] = v
        return DeltaFunction(self.lo, tuple(vals))


# -- the raising-coefficient recursion -----------------------------------------


def _check_m(i: int, j: int, m: SignedSet):
    if not (m.contains_even(j) or m.contains_odd(j)):
        raise BadSignedSet(f"M must contain {j} or {j} barred")
    if not m.is_signed_subset_of(range(i + 1, j + 1)):
        raise BadSignedSet(f"M must be a signed ({i}..{j}]-set")


def raising_rec(i: int, j: int, eps: int, delta: DeltaFunction, m: SignedSet) -> U0Element:
    """The raising coefficient by the case recursion on min M.

    All sign exponents are evaluated in Z/2; the result is a normal-form
    degree-zero element over exact integers.
    """
    if not i < j:
        raise BadSignedSet("need i < j")
    _check_m(i, j, m)
    if (delta.lo, delta.hi) != (i, j - 1):
        raise BadSignedSet(f"delta domain must be [{i}..{j - 1}]")
    return _rec(i, j, eps % 2, delta, m)


@lru_cache(maxsize=200000)
def _rec_cached(i, j, eps, delta_values, evens, odds):
    return _rec_work(
        i, j, eps, DeltaFunction(i, delta_values), SignedSet(evens, odds)
    )


def _rec(i: int, j: int, eps: int, delta: DeltaFunction, m: SignedSet) -> U0Element:
    return _rec_cached(i, j, eps, delta.values, m.evens, m.odds)


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _rec_work(i: int, j: int, eps: int, delta: DeltaFunction, m: SignedSet) -> U0Element:
    sd = delta.sum_range
    if m == SignedSet.of(odds=[j]):
        # base: a single barred element
        total = (eps + sd(i, j)) % 2
        first = U0Element.from_poly(Polynomial.const(1), (i,)) if total else u0_h(i)
        second = U0Element.from_poly(Polynomial.const(1), (i + 1,)) if total else u0_h(i + 1)
        return first - second.scale(_sgn(delta(i) * (eps + sd(i + 1, j))))
    if m == SignedSet.of(evens=[j]):
        # base: a single even element
        if sd(i, j) == eps:
            return u0_b(i, i + 1)
        return U0Element.zero()

    mn_val, mn_barred = m.min()
    tail = m.restrict(range(mn_val + 1, j + 1))
    par_tail = tail.parity()

    if mn_barred and mn_val == i + 1:
        out = U0Element.zero()
        for gamma in (0, 1):
            sigma = (eps + gamma) % 2
            sign = _sgn(gamma * (1 + eps + par_tail) + gamma * sd(i + 1, j))
            left = _rec(i, i + 1, gamma, delta.restrict(i, i), SignedSet.of(odds=[i + 1]))
            right = _rec(i + 1, j, sigma, delta.restrict(i + 1, j - 1), tail)
            out = out + (left * right).scale(sign)
        rest = m.remove((i + 1, True))
        for gamma in (0, 1):
            sigma = (eps + gamma) % 2
            sign = _sgn(sigma * (1 + m.parity()))
            out = out + (_rec(i, j, gamma, delta, rest) * u0_h_eps(i, sigma)).scale(sign)
        return out

    if (not mn_barred) and mn_val == i + 1:
        sign = _sgn(delta(i) * (1 + eps + par_tail) + delta(i) * sd(i + 1, j))
        out = (
            u0_b(i, i + 1)
            * _rec(i + 1, j, (eps + delta(i)) % 2, delta.restrict(i + 1, j - 1), tail)
        ).scale(sign)
        for xi in (0, 1):
            for tau in (0, 1):
                sigma = (eps + delta(i + 1) + xi + tau) % 2
                sign = _sgn(
                    (xi + tau + delta(i + 1))
                    * (1 + eps + par_tail + sd(i + 1, j) + xi)
                )
                left = _rec(
                    i, i + 1, xi, delta.restrict(i, i), SignedSet.of(odds=[i + 1])
                )
                right = _rec(
                    i + 1,
                    j,
                    sigma,
                    delta.restrict(i + 1, j - 1).with_value(i + 1, tau),
                    tail,
                )
                out = out - (left * right).scale(sign)
        rest = m.remove((i + 1, False))
        return out + _rec(i, j, eps, delta, rest) * u0_c(i, i + 1)

    mval = mn_val
    if mn_barred:
        # i + 1 < min M = m barred < j
        out = U0Element.zero()
        for gamma in (0, 1):
            sigma = (eps + gamma) % 2
            sign = _sgn(gamma * (1 + eps + par_tail + sd(mval, j)))
            left = _rec(
                i, mval, gamma, delta.restrict(i, mval - 1), SignedSet.of(odds=[mval])
            )
            right = _rec(mval, j, sigma, delta.restrict(mval, j - 1), tail)
            out = out + (left * right).scale(sign)
        shifted = m.replace((mval, True), (mval - 1, True))
        return out + _rec(i, j, eps, delta, shifted)

    # i + 1 < min M = m even < j
    sign = _sgn(sd(i, mval) * (1 + eps + par_tail + sd(mval, j)))
    out = (
        u0_b(i, i + 1)
        * _rec(mval, j, (eps + sd(i, mval)) % 2, delta.restrict(mval, j - 1), tail)
    ).scale(sign)
    for xi in (0, 1):
        for tau in (0, 1):
            sigma = (eps + delta(mval) + xi + tau) % 2
            sign = _sgn(
                (xi + tau + delta(mval)) * (1 + eps + par_tail + sd(mval, j) + xi)
            )
            left = _rec(
                i, mval, xi, delta.restrict(i, mval - 1), SignedSet.of(odds=[mval])
            )
            right = _rec(
                mval,
                j,
                sigma,
                delta.restrict(mval, j - 1).with_value(mval, tau),
                tail,
            )
            out = out - (left * right).scale(sign)
    shifted = m.replace((mval, False), (mval - 1, False))
    out = out + _rec(i, j, eps, delta, shifted)
    dropped = m.remove((mval, False))
    return out + _rec(i, j, eps, delta, dropped) * u0_c(mval - 1, mval)


# -- closed forms ---------------------------------------------------------------


def raising_closed(i: int, j: int, eps: int, delta: DeltaFunction, m: SignedSet) -> U0Element:
    """Closed form: an indicator times the bracket of a g1 when M is all
    even, and a signed sum of g2 brackets against H-generators when M has
    exactly one barred element."""
    from .poly import g1, g2

    if not i < j:
        raise BadSignedSet("need i < j")
    _check_m(i, j, m)
    eps %= 2
    if len(m.odds) == 0:
        if delta.total() != eps:
            return U0Element.zero()
        s = frozenset(t for t in range(i + 1, j) if not m.contains_even(t))
        return bracket_hom(g1(i, j, s))
    if len(m.odds) > 1:
        raise UnsupportedShape("no closed form for two or more barred elements")
    q = next(iter(m.odds))
    s = frozenset(t for t in range(i + 1, j + 1) if not m.contains_even(t))
    total = (eps + delta.total()) % 2
    out = U0Element.zero()
    for k in range(i, q + 1):
        if m.contains_even(k):
            continue
        if not (k - 1 in m.evens or k - 1 in (i - 1, i)):
            continue
        sign = _sgn((1 if k > i else 0) + (1 + total) * delta.sum_range(i, k))
        out = out + (bracket_hom(g2(i, k, q, j, s)) * u0_h_eps(k, total)).scale(sign)
    return out


def two_term_sum_sides(
    m_idx: int,
    j: int,
    q: int,
    eps: int,
    xi: int,
    delta: DeltaFunction,
    n_set: SignedSet,
):
    """Both sides of the two-term summation identity used to assemble the
    one-barred closed form; delta lives on [m..j-1]."""
    from .poly import g2

    sd_all = delta.total()
    lhs = U0Element.zero()
    for tau in (0, 1):
        sigma = (eps + delta(m_idx) + xi + tau) % 2
        sign = _sgn((xi + tau + delta(m_idx)) * (eps + sd_all + xi))
        lhs = lhs + _rec(
            m_idx, j, sigma, delta.with_value(m_idx, tau), n_set
        ).scale(sign)
    s = frozenset(t for t in range(m_idx + 1, j + 1) if not n_set.contains_even(t))
    indicator = 2 if (xi % 2) == (eps + sd_all) % 2 else 0
    rhs = (bracket_hom(g2(m_idx, m_idx, q, j, s)) * u0_h(m_idx)).scale(indicator)
    return lhs, rhs


# -- evaluation -----------------------------------------------------------------


def eval_at_weight(u: U0Element, lam: Weight, p: int | None = None) -> U0Element:
    """Substitute the weight entries for the H's and reduce mod p, keeping
    barred factors formal."""
    p = lam.p if p is None else p
    if p == 0:
        raise CharacteristicZero("modular evaluation needs p > 0")
    out: dict[Bars, Polynomial] = {}
    for bars, coeff in u.terms.items():
        assignment = {}
        for axis, idx in coeff.variables():
            if axis != "H":
                raise IndexOutOfRange(f"unexpected axis {axis!r}")
            if idx > lam.n:
                raise IndexOutOfRange(f"H_{idx} has no weight entry")
            assignment[(axis, idx)] = Polynomial.const(lam.entry(idx))
        value = coeff.substitute(assignment).constant_value() % p
        if value:
            out[bars] = Polynomial.const(value)
    return U0Element(out)


def res_difference(lam: Weight, i: int, j: int) -> int:
    """Res lambda_i - Res(lambda_j + 1) mod p: the eigenvalue of B(i, j)."""
    p = lam.p
    v = res_p(lam.entry(i), p) - res_p(lam.entry(j) + 1, p)
    return v % p if p else v
