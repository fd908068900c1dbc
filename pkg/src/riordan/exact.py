"""Exact rational scalars and basic combinatorial helpers.

The only scalar type in this package is :class:`fractions.Fraction`,
re-exported here as ``Rational``.  Fractions are always stored in lowest
terms with a positive denominator, and ``str()`` renders the canonical
text form ``"p/q"`` (or ``"p"`` when the denominator is 1) used by every
serialization surface.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

Rational = Fraction

__all__ = ["Rational", "binomial", "falling_factorial", "bell_partial", "parse_rational"]


def parse_rational(text: str) -> Fraction:
    """Parse canonical rational text, ``"p/q"`` or ``"p"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient C(n, k), defined for any integer n.

    Returns 0 when k < 0, and also when 0 <= n < k.  For negative n the
    generalized definition n(n-1)...(n-k+1)/k! applies, so for instance
    C(-1, 3) = -1.
    """
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(comb(n, k)) if k <= n else Fraction(0)
    num = 1
    for j in range(k):
        num *= n - j
    return Fraction(num, factorial(k))


def falling_factorial(x: Fraction | int, n: int) -> Fraction:
    """Falling factorial x(x-1)...(x-n+1); the empty product (n=0) is 1."""
    if n < 0:
        raise ValueError("falling_factorial requires n >= 0")
    out = Fraction(1)
    for j in range(n):
        out *= x - j
    return out


def bell_partial(n: int, i: int, a: Sequence[Fraction | int]) -> Fraction:
    """Partial exponential Bell polynomial B_{n,i}(a_1, ..., a_{n-i+1}).

    ``a[0]`` holds a_1.  Computed through the recurrence
    B_{n,i} = sum_j C(n-1, j-1) a_j B_{n-j,i-1} with B_{0,0} = 1 and
    B_{n,0} = 0 for n >= 1.  Raises if ``a`` is too short to reach
    a_{n-i+1}.
    """
    if n < 0 or i < 0:
        raise ValueError("bell_partial requires n, i >= 0")
    if i > n:
        return Fraction(0)
    if 1 <= i <= n and len(a) < n - i + 1:
        raise ValueError(
            f"bell_partial(n={n}, i={i}) needs the {n - i + 1} values a_1..a_{n - i + 1}, "
            f"got {len(a)}"
        )
    memo: dict[tuple[int, int], Fraction] = {}

    def b(m: int, j: int) -> Fraction:
        if j > m:
            return Fraction(0)
        if m == 0:
            return Fraction(1)
        if j == 0:
            return Fraction(0)
        key = (m, j)
        got = memo.get(key)
        if got is None:
            got = Fraction(0)
            for r in range(1, m - j + 2):
                got += comb(m - 1, r - 1) * Fraction(a[r - 1]) * b(m - r, j - 1)
            memo[key] = got
        return got

    return b(n, i)
