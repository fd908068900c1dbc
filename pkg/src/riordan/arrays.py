"""Weighted Riordan arrays, their group structure and Sheffer sequences.

An array is generated by a pair of umbrae (gamma, alpha) together with a
weight sequence c_0 = 1, c_1, c_2, ... of nonzero rationals; the entry at
(n, k) is

    (c_n / c_k) * E[(gamma + k.alpha)^(n-k)] / (n-k)!

for 0 <= k <= n and 0 outside the triangle.  The classical cases are the
exponential weights c_n = n! and the ordinary weights c_n = 1.  Entries
are materialized lazily and memoized; the diagonal is always 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .umbra import Umbra, had, kappa, lagrange, named, sdot, ucompose, usum

__all__ = ["WeightSeq", "RiordanArray", "Polynomial", "subgroup", "umbral_composition"]


class WeightSeq:
    """The weight sequence (c_n) of an array; equivalently the umbra
    whose n-th moment is n!/c_n."""

    __slots__ = ("kind", "_cs", "_om")

    def __init__(self, kind: str, cs: tuple[Fraction, ...] | None = None, om: Umbra | None = None):
        self.kind = kind
        self._cs = cs
        self._om = om

    @classmethod
    def exponential(cls) -> "WeightSeq":
        return cls("exponential")

    @classmethod
    def ordinary(cls) -> "WeightSeq":
        return cls("ordinary")

    @classmethod
    def custom(cls, cs: Iterable[int | Fraction]) -> "WeightSeq":
        vals = tuple(Fraction(c) for c in cs)
        if not vals or vals[0] != 1:
            raise ValueError("weight c_0 must be 1")
        return cls("custom", cs=vals)

    @classmethod
    def from_omega(cls, om: Umbra) -> "WeightSeq":
        """Weights c_n = n!/E[om^n]; the moments must all be nonzero."""
        if om.moment(0) != 1:
            raise ValueError("weight umbra must have moment 0 equal to 1")
        return cls("custom", om=om)

    def c(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("weights are undefined for negative index")
        if self.kind == "exponential":
            return Fraction(factorial(n))
        if self.kind == "ordinary":
            return Fraction(1)
        if self._cs is not None:
            if n >= len(self._cs):
                raise ValueError(f"weights given only up to c_{len(self._cs) - 1}")
            value = self._cs[n]
        else:
            m = self._om.moment(n)
            if m == 0:
                raise ValueError(f"weight umbra has zero moment at n={n}")
            value = Fraction(factorial(n)) / m
        if value == 0:
            raise ValueError(f"weight c_{n} is zero")
        return value

    def omega(self) -> Umbra:
        """The umbra with moments n!/c_n."""
        if self.kind == "exponential":
            return named("unity")
        if self.kind == "ordinary":
            return named("boolean_unity")
        if self._om is None:
            cs = self._cs

            def fn(order: int) -> list[Fraction]:
                if order >= len(cs):
                    raise ValueError(f"weights given only up to c_{len(cs) - 1}")
                return [Fraction(factorial(n)) / cs[n] for n in range(order + 1)]

            self._om = Umbra("omega(custom)", fn)
        return self._om

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightSeq):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind != "custom":
            return True
        if self._cs is not None and other._cs is not None:
            return self._cs == other._cs
        return self._om is other._om

    def __repr__(self) -> str:
        return f"WeightSeq({self.kind})"


class Polynomial:
    """Dense polynomial over the rationals; index equals degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction]):
        cs = [Fraction(c) for c in coeffs] or [Fraction(0)]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    def __rmul__(self, scalar: int | Fraction) -> "Polynomial":
        return Polynomial([Fraction(scalar) * c for c in self.coeffs])

    def __call__(self, x: int | Fraction) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self) -> str:
        return f"Polynomial({','.join(str(c) for c in self.coeffs)})"


class RiordanArray:
    """A lazily materialized weighted Riordan array."""

    __slots__ = ("gamma", "alpha", "weights", "_entries")

    def __init__(self, gamma: Umbra, alpha: Umbra, weights: WeightSeq):
        weights.c(0)  # validates c_0 on bad custom data
        self.gamma = gamma
        self.alpha = alpha
        self.weights = weights
        self._entries: dict[tuple[int, int], Fraction] = {}

    def __repr__(self) -> str:
        return f"RiordanArray({self.gamma.name}, {self.alpha.name}; {self.weights.kind})"

    def entry(self, n: int, k: int) -> Fraction:
        """The (n, k) entry; 0 outside the lower triangle."""
        if k < 0 or k > n:
            return Fraction(0)
        key = (n, k)
        got = self._entries.get(key)
        if got is None:
            col = usum(self.gamma, sdot(k, self.alpha))
            got = (
                self.weights.c(n)
                / self.weights.c(k)
                * col.moment(n - k)
                / factorial(n - k)
            )
            self._entries[key] = got
        return got

    def row(self, n: int) -> list[Fraction]:
        return [self.entry(n, k) for k in range(n + 1)]

    def matrix(self, rows: int) -> list[list[Fraction]]:
        """All entries with 0 <= k <= n <= rows."""
        if rows < 0:
            raise ValueError("rows must be >= 0")
        return [self.row(n) for n in range(rows + 1)]

    def multiply(self, other: "RiordanArray") -> "RiordanArray":
        """Group product; both factors must carry the same weights."""
        if self.weights != other.weights:
            raise ValueError("cannot multiply arrays with different weight sequences")
        return RiordanArray(
            usum(self.gamma, ucompose(other.gamma, self.alpha)),
            usum(self.alpha, ucompose(other.alpha, self.alpha)),
            self.weights,
        )

    __mul__ = multiply

    def inverse(self) -> "RiordanArray":
        """Group inverse: the pair of Lagrange involutions, same weights."""
        return RiordanArray(
            lagrange(self.gamma, self.alpha), lagrange(self.alpha), self.weights
        )

    def apply(self, eta: Umbra, upto: int) -> list[Fraction]:
        """Matrix action on the moment column of eta: row n gives
        sum_k entry(n, k) E[eta^k], for n = 0..upto."""
        em = eta.moments(upto)
        return [
            sum((self.entry(n, k) * em[k] for k in range(n + 1)), Fraction(0))
            for n in range(upto + 1)
        ]

    def apply_closed(self, eta: Umbra, upto: int) -> list[Fraction]:
        """The same action in closed umbral form:
        (c_n/n!) E[(gamma + (omega eta).bell.D(alpha))^n]."""
        om = self.weights.omega()
        u = usum(self.gamma, ucompose(had(om, eta), self.alpha))
        ms = u.moments(upto)
        return [self.weights.c(n) / factorial(n) * ms[n] for n in range(upto + 1)]

    def row_sum(self, n: int) -> Fraction:
        return sum(self.row(n), Fraction(0))

    def row_sum_closed(self, n: int) -> Fraction:
        """Row sums via (c_n/n!) E[(gamma + omega.bell.D(alpha))^n]."""
        u = usum(self.gamma, ucompose(self.weights.omega(), self.alpha))
        return self.weights.c(n) / factorial(n) * u.moment(n)

    def sheffer(self, n: int) -> Polynomial:
        """Row n as a polynomial, sum_k entry(n, k) x^k."""
        return Polynomial(self.row(n))

    def a_sequence(self, m: int, i: int) -> Fraction:
        """a_i^(m) = E[(m.kappa(alpha))^i]
        = i! [t^i] f_alpha((t f_alpha)^<-1>)^m."""
        return sdot(m, kappa(self.alpha)).moment(i)


def subgroup(kind: str, u: Umbra, weights: WeightSeq) -> RiordanArray:
    """The Appell (u, eps), Associated (eps, u) or Bell (u, u) array."""
    e = named("eps")
    if kind == "appell":
        return RiordanArray(u, e, weights)
    if kind == "associated":
        return RiordanArray(e, u, weights)
    if kind == "bell":
        return RiordanArray(u, u, weights)
    raise ValueError(f"unknown subgroup {kind!r}")


def umbral_composition(a: RiordanArray, b: RiordanArray, n: int) -> Polynomial:
    """The umbral composition sum_k a.entry(n, k) * b.sheffer(k).

    Equals the Sheffer polynomial of the product array, which is what
    makes the Sheffer group isomorphic to the array group.
    """
    if a.weights != b.weights:
        raise ValueError("umbral composition requires matching weight sequences")
    out = Polynomial([0])
    for k in range(n + 1):
        c = a.entry(n, k)
        if c:
            out = out + c * b.sheffer(k)
    return out
