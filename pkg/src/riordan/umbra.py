"""Umbrae as exact moment sequences.

An umbra is identified here with the sequence of its moments a_n
(with a_0 = 1); its moment generating function is
f(t) = sum_n a_n t^n / n!.  Every constructor returns an object that can
produce any prefix of its moment sequence on demand and memoizes what it
has computed.  Construction is cheap; the real work happens lazily.

The operations follow the usual symbolic rules, stated in terms of the
m.g.f.:

* ``usum(a, b)``        binomial convolution of moments (m.g.f.s multiply)
* ``sdot(x, a)``        f_a(t)^x for any rational x
* ``udot(g, a)``        f_g(log f_a(t))
* ``bellcompose(g, a)`` f_g(f_a(t) - 1), the composition umbra
* ``ucompose(s, a)``    f_s(t f_a(t))
* ``deriv(a)``          1 + t f_a(t), so the n-th moment is n a_{n-1}
* ``cinv(a)``           1 + reversion of f_a(t) - 1
* ``kappa(s, a)``       f_s((t f_a(t))^<-1>), the Abel umbra
* ``lagrange(s, a)``    sdot(-1, kappa(s, a)), the Lagrange involution

Two umbrae built by different recipes for the same object agree on all
moments; ``similar(a, b, upto)`` checks that up to a requested order.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Sequence

from .exact import bell_partial
from .series import Series

__all__ = [
    "Umbra",
    "named",
    "delta",
    "from_moments",
    "from_gf",
    "usum",
    "sdot",
    "udot",
    "had",
    "deriv",
    "cinv",
    "bellcompose",
    "ucompose",
    "kappa",
    "lagrange",
    "abel_moment",
    "dot_via_bell",
    "similar",
]

NAMED_UMBRAE = ("eps", "unity", "singleton", "bell", "bernoulli", "boolean_unity")


class Umbra:
    """A lazy exact moment sequence with a memo cache.

    The recipe function returns the full moment prefix 0..order; recipes
    are deterministic, so concurrent readers racing to extend the cache
    always observe identical values.
    """

    __slots__ = ("name", "_fn", "_cache", "_derived")

    def __init__(self, name: str, fn: Callable[[int], list[Fraction]]):
        self.name = name
        self._fn = fn
        self._cache: list[Fraction] = []
        self._derived: dict = {}

    def moment(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("moment index must be >= 0")
        cache = self._cache
        if n >= len(cache):
            fresh = self._fn(n)
            if len(fresh) > len(self._cache):
                self._cache = list(fresh)
            cache = self._cache
        return cache[n]

    def moments(self, upto: int) -> list[Fraction]:
        """Moments 0..upto as a list."""
        self.moment(upto)
        return self._cache[: upto + 1]

    def mgf(self, order: int) -> Series:
        """The moment generating function truncated at the given order."""
        ms = self.moments(order)
        return Series(ms[n] / factorial(n) for n in range(order + 1))

    def __repr__(self) -> str:
        return f"Umbra({self.name})"


def similar(a: Umbra, b: Umbra, upto: int) -> bool:
    """Whether a and b have equal moments for all n <= upto."""
    return a.moments(upto) == b.moments(upto)


# -- recipe helpers -----------------------------------------------------------


def _moments_fn(per_index: Callable[[int], Fraction]) -> Callable[[int], list[Fraction]]:
    def fn(order: int) -> list[Fraction]:
        return [per_index(n) for n in range(order + 1)]

    return fn


def _gf_moments_fn(build: Callable[[int], Series]) -> Callable[[int], list[Fraction]]:
    # build(order >= 1) must return the m.g.f. truncated at that order.
    def fn(order: int) -> list[Fraction]:
        if order == 0:
            return [Fraction(1)]
        f = build(order)
        return [factorial(n) * f.coeff(n) for n in range(order + 1)]

    return fn


def _derived(owner: Umbra, key, build: Callable[[], Umbra]) -> Umbra:
    got = owner._derived.get(key)
    if got is None:
        got = build()
        owner._derived[key] = got
    return got


def _t_mgf(a: Umbra, order: int) -> Series:
    # t * f_a(t) at the given order; needs moments of a only through order-1.
    if order == 0:
        return Series([Fraction(0)])
    return Series((Fraction(0),) + a.mgf(order - 1).coeffs)


# -- fundamental umbrae --------------------------------------------------------


def _build_bell_gf(order: int) -> Series:
    return (Series.t(order).exp() - 1).exp()


def _build_bernoulli_gf(order: int) -> Series:
    # t/(e^t - 1): divide out the t first, then take the reciprocal.
    e = Series.t(order + 1).exp()
    return Series.one(order) / Series(e.coeffs[1:])


_NAMED_BUILDERS: dict[str, Callable[[], Umbra]] = {
    "eps": lambda: Umbra("eps", _moments_fn(lambda n: Fraction(1 if n == 0 else 0))),
    "unity": lambda: Umbra("unity", _moments_fn(lambda n: Fraction(1))),
    "singleton": lambda: Umbra("singleton", _moments_fn(lambda n: Fraction(1 if n <= 1 else 0))),
    "bell": lambda: Umbra("bell", _gf_moments_fn(_build_bell_gf)),
    "bernoulli": lambda: Umbra("bernoulli", _gf_moments_fn(_build_bernoulli_gf)),
    "boolean_unity": lambda: Umbra("boolean_unity", _moments_fn(lambda n: Fraction(factorial(n)))),
}

_named_cache: dict[str, Umbra] = {}


def named(name: str) -> Umbra:
    """One of the fundamental umbrae: eps, unity, singleton, bell,
    bernoulli, boolean_unity.  Instances are shared so their moment
    caches are too."""
    builder = _NAMED_BUILDERS.get(name)
    if builder is None:
        raise ValueError(f"unknown umbra name {name!r}")
    u = _named_cache.get(name)
    if u is None:
        u = builder()
        _named_cache[name] = u
    return u


def delta(k: int) -> Umbra:
    """The umbra with m.g.f. 1 + t^k/k!: moment k is 1, all others 0."""
    if k < 1:
        raise ValueError("delta requires k >= 1")
    return Umbra(f"delta({k})", _moments_fn(lambda n: Fraction(1 if n == 0 or n == k else 0)))


def from_moments(ms: Iterable[int | Fraction]) -> Umbra:
    """An umbra given by an explicit moment prefix (moment 0 must be 1).

    Only the listed moments are known; asking past them is an error.
    """
    vals = tuple(Fraction(m) for m in ms)
    if not vals or vals[0] != 1:
        raise ValueError("moment 0 must be 1")

    def fn(order: int) -> list[Fraction]:
        if order >= len(vals):
            raise ValueError(f"umbra defined only up to moment {len(vals) - 1}, asked for {order}")
        return list(vals[: order + 1])

    return Umbra(f"mom({','.join(str(v) for v in vals)})", fn)


def from_gf(coeffs: Iterable[int | Fraction]) -> Umbra:
    """An umbra whose m.g.f. is the given polynomial (constant term 1).

    A polynomial determines every coefficient, so moments of any order
    are available: n! times the coefficient, zero past the degree.
    """
    cs = tuple(Fraction(c) for c in coeffs)
    if not cs or cs[0] != 1:
        raise ValueError("constant coefficient must be 1")

    def per(n: int) -> Fraction:
        return factorial(n) * cs[n] if n < len(cs) else Fraction(0)

    return Umbra(f"gf({','.join(str(c) for c in cs)})", _moments_fn(per))


# -- operations -----------------------------------------------------------------


def _usum2(a: Umbra, b: Umbra) -> Umbra:
    def build() -> Umbra:
        def fn(order: int) -> list[Fraction]:
            am = a.moments(order)
            bm = b.moments(order)
            return [
                sum((comb(n, j) * am[j] * bm[n - j] for j in range(n + 1)), Fraction(0))
                for n in range(order + 1)
            ]

        return Umbra(f"({a.name} + {b.name})", fn)

    return _derived(a, ("usum", b), build)


def usum(*umbrae: Umbra) -> Umbra:
    """Disjoint-support sum: m.g.f.s multiply, moments convolve binomially."""
    if not umbrae:
        raise ValueError("usum needs at least one umbra")
    out = umbrae[0]
    for u in umbrae[1:]:
        out = _usum2(out, u)
    return out


def sdot(x: int | Fraction, a: Umbra) -> Umbra:
    """Scalar dot product x.a, with m.g.f. f_a(t)^x (any rational x)."""
    x = Fraction(x)

    def build() -> Umbra:
        if x == 0:
            return named("eps")
        if x == 1:
            return a
        return Umbra(f"{x}.{a.name}", _gf_moments_fn(lambda order: a.mgf(order).pow(x)))

    return _derived(a, ("sdot", x), build)


def udot(g: Umbra, a: Umbra) -> Umbra:
    """Umbral dot product g.a, with m.g.f. f_g(log f_a(t))."""

    def build() -> Umbra:
        return Umbra(
            f"{g.name}.{a.name}",
            _gf_moments_fn(lambda order: g.mgf(order).compose(a.mgf(order).log())),
        )

    return _derived(g, ("udot", a), build)


def had(g: Umbra, a: Umbra) -> Umbra:
    """Product of uncorrelated umbrae: moments multiply index-wise."""

    def build() -> Umbra:
        return Umbra(f"{g.name}*{a.name}", _moments_fn(lambda n: g.moment(n) * a.moment(n)))

    return _derived(g, ("had", a), build)


def deriv(a: Umbra) -> Umbra:
    """Derivative umbra: moment n is n a_{n-1}; m.g.f. 1 + t f_a(t)."""

    def build() -> Umbra:
        return Umbra(
            f"D({a.name})",
            _moments_fn(lambda n: Fraction(1) if n == 0 else n * a.moment(n - 1)),
        )

    return _derived(a, ("deriv",), build)


def cinv(a: Umbra) -> Umbra:
    """Compositional inverse: f - 1 is the reversion of f_a - 1.

    Requires a nonzero first moment.
    """
    if a.moment(1) == 0:
        raise ValueError("compositional inverse requires a nonzero first moment")

    def build() -> Umbra:
        return Umbra(
            f"inv({a.name})",
            _gf_moments_fn(lambda order: (a.mgf(order) - 1).revert() + 1),
        )

    return _derived(a, ("cinv",), build)


def bellcompose(g: Umbra, a: Umbra) -> Umbra:
    """The composition umbra g.bell.a, with m.g.f. f_g(f_a(t) - 1)."""

    def build() -> Umbra:
        return Umbra(
            f"{g.name}.bell.{a.name}",
            _gf_moments_fn(lambda order: g.mgf(order).compose(a.mgf(order) - 1)),
        )

    return _derived(g, ("bellc", a), build)


def ucompose(s: Umbra, a: Umbra) -> Umbra:
    """s.bell.D(a), with m.g.f. f_s(t f_a(t))."""

    def build() -> Umbra:
        return Umbra(
            f"{s.name}.bell.D({a.name})",
            _gf_moments_fn(lambda order: s.mgf(order).compose(_t_mgf(a, order))),
        )

    return _derived(s, ("ucomp", a), build)


def kappa(s: Umbra, a: Umbra | None = None) -> Umbra:
    """The Abel umbra of s and a, with m.g.f. f_s((t f_a(t))^<-1>).

    With one argument, kappa(a) = kappa(a, a).  Always defined: t f_a(t)
    has linear coefficient 1, so its reversion exists.
    """
    if a is None:
        a = s

    def build() -> Umbra:
        return Umbra(
            f"K({s.name},{a.name})",
            _gf_moments_fn(lambda order: s.mgf(order).compose(_t_mgf(a, order).revert())),
        )

    return _derived(s, ("kappa", a), build)


def lagrange(s: Umbra, a: Umbra | None = None) -> Umbra:
    """The Lagrange involution, sdot(-1, kappa(s, a))."""
    if a is None:
        a = s
    return sdot(-1, kappa(s, a))


def abel_moment(s: Umbra, a: Umbra, n: int) -> Fraction:
    """E[s (s + (-n).a)^(n-1)], expanded directly by uncorrelation.

    This is the Abel-polynomial route to the moments of kappa(s, a),
    independent of the reversion route.
    """
    if n < 1:
        raise ValueError("abel_moment requires n >= 1")
    sm = s.moments(n)
    tm = sdot(-n, a).moments(n - 1)
    return sum((comb(n - 1, j) * sm[j + 1] * tm[n - 1 - j] for j in range(n)), Fraction(0))


def dot_via_bell(g: Umbra, a: Umbra, n: int) -> Fraction:
    """Moment n of g.a via partial Bell polynomials.

    Evaluates sum_i E[(g)_i] B_{n,i}(a_1, ...), where the factorial
    moments E[(g)_i] come from g's moments through signed Stirling
    numbers of the first kind.  The Stirling values are taken from the
    catalog oracles on purpose, so this route shares nothing with the
    series-based udot.
    """
    from .catalog import stirling1  # late import: catalog depends on this module

    if n < 0:
        raise ValueError("dot_via_bell requires n >= 0")
    gm = g.moments(n)
    aseq: Sequence[Fraction] = a.moments(n)[1:]
    total = Fraction(0)
    for i in range(n + 1):
        fm = sum((stirling1(i, j) * gm[j] for j in range(i + 1)), Fraction(0))
        if fm:
            total += fm * bell_partial(n, i, aseq)
    return total
