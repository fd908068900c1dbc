"""Classical sequences from textbook recurrences, plus named arrays.

The sequence functions here are deliberately self-contained: they use
no series or umbra machinery, only integer/rational recurrences, so they
can serve as independent oracles for the engine.  The one internal
dependency is that the Cauchy numbers expand an integral termwise with
Stirling numbers of the first kind, whose own oracle is recurrence-only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .arrays import RiordanArray, WeightSeq
from .identities import VerificationReport, make_report
from .umbra import named, sdot, udot

__all__ = [
    "bell",
    "bernoulli",
    "bernoulli_gen",
    "stirling2",
    "stirling1",
    "catalan",
    "catalan_gen",
    "cauchy1",
    "cauchy1_gen",
    "oracle",
    "named_array",
    "example_identity",
    "NAMED_ARRAYS",
    "EXAMPLE_IDENTITIES",
]

NAMED_ARRAYS = ("pascal_exp", "pascal_ord", "stirling2", "stirling1")
EXAMPLE_IDENTITIES = (
    "ex2_stirling_cauchy_bernoulli",
    "ex3_stirling_bernoulli",
    "ex4_catalan_binomial",
)


_bell_rows: list[list[int]] = [[1]]


def bell(n: int) -> int:
    """Bell numbers through the Bell triangle."""
    if n < 0:
        raise ValueError("bell requires n >= 0")
    rows = _bell_rows
    while len(rows) <= n:
        prev = rows[-1]
        row = [prev[-1]]
        for v in prev:
            row.append(row[-1] + v)
        rows.append(row)
    return rows[n][0]


_bernoulli: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers (b_1 = -1/2) via sum_j C(m+1, j) b_j = 0."""
    if n < 0:
        raise ValueError("bernoulli requires n >= 0")
    bs = _bernoulli
    while len(bs) <= n:
        m = len(bs)
        s = sum(comb(m + 1, j) * bs[j] for j in range(m))
        bs.append(-s / (m + 1))
    return bs[n]


def _bconv(x: list[Fraction], y: list[Fraction]) -> list[Fraction]:
    # binomial convolution of moment-style sequences
    return [
        sum((comb(n, j) * x[j] * y[n - j] for j in range(n + 1)), Fraction(0))
        for n in range(len(x))
    ]


@lru_cache(maxsize=None)
def bernoulli_gen(k: int, n: int) -> Fraction:
    """Generalized Bernoulli numbers b_n^(k) = n! [t^n] (t/(e^t-1))^k.

    Positive order k folds the Bernoulli sequence with itself; negative
    order folds the moments of (e^t-1)/t, which are the factorial
    reciprocals 1/(j+1).
    """
    if n < 0:
        raise ValueError("bernoulli_gen requires n >= 0")
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    if k > 0:
        base = [bernoulli(j) for j in range(n + 1)]
    else:
        base = [Fraction(1, j + 1) for j in range(n + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(abs(k)):
        acc = _bconv(acc, base)
    return acc[n]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Signed Stirling numbers of the first kind,
    s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)."""
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return stirling1(n - 1, k - 1) - (n - 1) * stirling1(n - 1, k)


_catalan: list[int] = [1]


def catalan(n: int) -> int:
    """Catalan numbers via C_{m+1} = sum_i C_i C_{m-i}."""
    if n < 0:
        raise ValueError("catalan requires n >= 0")
    cs = _catalan
    while len(cs) <= n:
        m = len(cs)
        cs.append(sum(cs[i] * cs[m - 1 - i] for i in range(m)))
    return cs[n]


def _oconv(x: list[Fraction], y: list[Fraction]) -> list[Fraction]:
    return [
        sum((x[j] * y[n - j] for j in range(n + 1)), Fraction(0))
        for n in range(len(x))
    ]


@lru_cache(maxsize=None)
def catalan_gen(m: int, i: int) -> Fraction:
    """Generalized Catalan numbers: the coefficients of the m-th power of
    the Catalan generating function, via m-fold ordinary convolution.

    For negative m the reciprocal sequence 1, -C_0, -C_1, ... is folded
    instead (from c(t) = 1 + t c(t)^2, so 1/c(t) = 1 - t c(t)).
    """
    if i < 0:
        raise ValueError("catalan_gen requires i >= 0")
    if m == 0:
        return Fraction(1 if i == 0 else 0)
    if m > 0:
        base = [Fraction(catalan(j)) for j in range(i + 1)]
    else:
        base = [Fraction(1)] + [Fraction(-catalan(j)) for j in range(i)]
    acc = [Fraction(1)] + [Fraction(0)] * i
    for _ in range(abs(m)):
        acc = _oconv(acc, base)
    return acc[i]


def cauchy1(n: int) -> Fraction:
    """Cauchy numbers of the first type: the integral of the falling
    factorial over [0, 1], expanded termwise with Stirling numbers."""
    if n < 0:
        raise ValueError("cauchy1 requires n >= 0")
    return sum((Fraction(stirling1(n, j), j + 1) for j in range(n + 1)), Fraction(0))


@lru_cache(maxsize=None)
def cauchy1_gen(m: int, n: int) -> Fraction:
    """Generalized Cauchy numbers n! [t^n] (t/log(1+t))^m via m-fold
    binomial convolution; negative m folds the moments of log(1+t)/t,
    which are (-1)^j j!/(j+1)."""
    if n < 0:
        raise ValueError("cauchy1_gen requires n >= 0")
    if m == 0:
        return Fraction(1 if n == 0 else 0)
    if m > 0:
        base = [cauchy1(j) for j in range(n + 1)]
    else:
        base = [Fraction((-1) ** j * factorial(j), j + 1) for j in range(n + 1)]
    acc = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(abs(m)):
        acc = _bconv(acc, base)
    return acc[n]


_ORACLES = {
    "bell": bell,
    "bernoulli": bernoulli,
    "bernoulli_gen": bernoulli_gen,
    "stirling2": stirling2,
    "stirling1": stirling1,
    "catalan": catalan,
    "catalan_gen": catalan_gen,
    "cauchy1": cauchy1,
    "cauchy1_gen": cauchy1_gen,
}


def oracle(name: str, *args: int):
    """Dispatch to a sequence oracle by name."""
    fn = _ORACLES.get(name)
    if fn is None:
        raise ValueError(f"unknown oracle {name!r}")
    return fn(*args)


def named_array(name: str) -> RiordanArray:
    """The classical arrays in their umbral descriptions."""
    if name == "pascal_exp":
        return RiordanArray(named("unity"), named("eps"), WeightSeq.exponential())
    if name == "pascal_ord":
        b = named("boolean_unity")
        return RiordanArray(b, b, WeightSeq.ordinary())
    if name == "stirling2":
        return RiordanArray(named("eps"), sdot(-1, named("bernoulli")), WeightSeq.exponential())
    if name == "stirling1":
        return RiordanArray(
            named("eps"), udot(named("bernoulli"), named("singleton")), WeightSeq.exponential()
        )
    raise ValueError(f"unknown array {name!r}")


def example_identity(name: str, **params: int) -> VerificationReport:
    """End-to-end combinatorial identities evaluated from oracles only.

    * ex2_stirling_cauchy_bernoulli(n, k, m):
        S(n,k) = C(n,k) sum_i C(n-k,i) Cauchy_i^(m) b_(n-k-i)^(m-k-i)
    * ex3_stirling_bernoulli(n, k):
        S(n,k) = C(n,k) b_(n-k)^(-k)
    * ex4_catalan_binomial(n, k, m), valid for 2k - n >= m:
        C(n,k) = sum_i Catalan_i^(m) C(n-m-2i, k-m-i)
    """
    if name == "ex3_stirling_bernoulli":
        n, k = params["n"], params["k"]
        if not 0 <= k <= n:
            raise ValueError("requires n >= k >= 0")
        lhs = Fraction(stirling2(n, k))
        rhs = comb(n, k) * bernoulli_gen(-k, n - k)
        return make_report(name, dict(params), lhs, rhs)
    if name == "ex2_stirling_cauchy_bernoulli":
        n, k, m = params["n"], params["k"], params["m"]
        if not 0 <= k <= n:
            raise ValueError("requires n >= k >= 0")
        lhs = Fraction(stirling2(n, k))
        rhs = Fraction(0)
        for i in range(n - k + 1):
            rhs += comb(n - k, i) * cauchy1_gen(m, i) * bernoulli_gen(m - k - i, n - k - i)
        rhs *= comb(n, k)
        return make_report(name, dict(params), lhs, rhs)
    if name == "ex4_catalan_binomial":
        n, k, m = params["n"], params["k"], params["m"]
        if not 0 <= k <= n:
            raise ValueError("requires n >= k >= 0")
        if 2 * k - n < m:
            raise ValueError(f"requires 2k - n >= m, got n={n}, k={k}, m={m}")
        lhs = Fraction(comb(n, k))
        rhs = Fraction(0)
        for i in range(n - k + 1):
            rhs += catalan_gen(m, i) * comb(n - m - 2 * i, k - m - i)
        return make_report(name, dict(params), lhs, rhs)
    raise ValueError(f"unknown example identity {name!r}")
