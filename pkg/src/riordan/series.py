"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores the coefficients of t^0 .. t^order explicitly.
Nothing past the order is known: asking for a coefficient beyond it is an
error, never a silent zero, so identity checks can never read fabricated
data.  Binary operations truncate to the smaller order of the two
operands and the result carries that order.

Reversion (the compositional inverse) runs Newton iteration with
order-doubling; the classical coefficient-extraction formula for the
inverse is kept out of this module on purpose so that tests can use it as
an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = ["Series"]


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = cs

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([Fraction(0)] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def t(cls, order: int) -> "Series":
        """The series t truncated at the given order."""
        if order == 0:
            return cls([Fraction(0)])
        return cls([Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1))

    @classmethod
    def from_text(cls, text: str) -> "Series":
        return cls(Fraction(part.strip()) for part in text.split(","))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        """The coefficient of t^n; error when n is outside 0..order."""
        if n < 0 or n > self.order:
            raise ValueError(f"coefficient {n} is outside the known order {self.order}")
        return self.coeffs[n]

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Series({self.text()})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def truncated(self, order: int) -> "Series":
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if order < 0 or order > self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to order {order}")
        return Series(self.coeffs[: order + 1])

    def _padded(self, order: int) -> "Series":
        # Internal: extend with zeros where the caller knows they are exact
        # (or provably irrelevant, as in the Newton correction term).
        if order <= self.order:
            return self.truncated(order)
        return Series(self.coeffs + (Fraction(0),) * (order - self.order))

    # -- ring operations ----------------------------------------------------

    def _coerced(self, other) -> "Series | None":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series([Fraction(other)] + [Fraction(0)] * self.order)
        return None

    def __add__(self, other) -> "Series":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return Series(self.coeffs[m] + rhs.coeffs[m] for m in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-c for c in self.coeffs)

    def __sub__(self, other) -> "Series":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "Series":
        lhs = self._coerced(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other) -> "Series":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        a, b = self.coeffs, rhs.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        if rhs.coeffs[0] == 0:
            raise ValueError("division requires a nonzero constant term in the divisor")
        n = min(self.order, rhs.order)
        a, b = self.coeffs, rhs.coeffs
        q = [Fraction(0)] * (n + 1)
        for m in range(n + 1):
            acc = a[m]
            for k in range(1, m + 1):
                if b[k] and q[m - k]:
                    acc -= b[k] * q[m - k]
            q[m] = acc / b[0]
        return Series(q)

    def __rtruediv__(self, other) -> "Series":
        lhs = self._coerced(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    # -- transcendental operations -------------------------------------------

    def deriv(self) -> "Series":
        """Formal derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 series")
        return Series(k * self.coeffs[k] for k in range(1, self.order + 1))

    def exp(self) -> "Series":
        """exp of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires a zero constant term")
        n = self.order
        a = self.coeffs
        e = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if a[k] and e[m - k]:
                    acc += k * a[k] * e[m - k]
            e[m] = acc / m
        return Series(e)

    def log(self) -> "Series":
        """log of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        a = self.coeffs
        l = [Fraction(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m):
                if l[k] and a[m - k]:
                    acc += k * l[k] * a[m - k]
            l[m] = a[m] - acc / m
        return Series(l)

    def pow(self, x: Scalar) -> "Series":
        """Raise a series with constant term 1 to any rational power.

        Integer exponents go through exact binary powering; everything
        else through exp(x log a).
        """
        x = Fraction(x)
        if self.coeffs[0] != 1:
            raise ValueError("pow requires constant term 1")
        if x.denominator == 1:
            return self._ipow(int(x))
        return (x * self.log()).exp()

    __pow__ = pow

    def _ipow(self, e: int) -> "Series":
        base = self if e >= 0 else Series.one(self.order) / self
        e = abs(e)
        out = Series.one(self.order)
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def compose(self, inner: "Series") -> "Series":
        """self(inner(t)) for an inner series with zero constant term."""
        if not isinstance(inner, Series):
            raise TypeError("compose expects a Series")
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires a zero constant term in the inner series")
        n = min(self.order, inner.order)
        f = self.coeffs
        g = inner.truncated(n)
        out = Series([f[n]] + [Fraction(0)] * n)
        for i in range(n - 1, -1, -1):
            out = out * g + f[i]
        return out

    __call__ = compose

    def revert(self) -> "Series":
        """Compositional inverse h with self(h(t)) = t = h(self(t)).

        Requires a zero constant term and a nonzero linear coefficient.
        Newton iteration doubles the number of correct coefficients per
        round, so the cost is a few full-order compositions.
        """
        if self.coeffs[0] != 0:
            raise ValueError("reversion requires a zero constant term")
        if self.order < 1 or self.coeffs[1] == 0:
            raise ValueError("reversion requires a nonzero linear coefficient")
        n = self.order
        h = Series([Fraction(0), 1 / self.coeffs[1]])
        correct = 1
        while correct < n:
            correct = min(2 * correct, n)
            g = self.truncated(correct)
            ht = h._padded(correct)
            residual = g.compose(ht) - Series.t(correct)
            # The derivative's unknown top coefficient cannot influence the
            # correction below the working order because the residual has
            # no terms of low degree.
            slope = g.deriv()._padded(correct).compose(ht)
            h = ht - residual / slope
        return h
