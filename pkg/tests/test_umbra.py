import random
from fractions import Fraction as F
from math import comb, factorial

import pytest

from riordan import catalog
from riordan.identities import random_umbra
from riordan.umbra import (
    abel_moment,
    bellcompose,
    cinv,
    delta,
    deriv,
    dot_via_bell,
    from_gf,
    from_moments,
    had,
    kappa,
    lagrange,
    named,
    sdot,
    similar,
    ucompose,
    udot,
    usum,
)


def cauchy_integral(n: int) -> F:
    # integral over [0,1] of x(x-1)...(x-n+1), by expanding the polynomial
    poly = [F(1)]
    for j in range(n):
        poly = [(F(0) if i == 0 else poly[i - 1]) - j * (poly[i] if i < len(poly) else F(0)) for i in range(len(poly) + 1)]
    return sum(c / (i + 1) for i, c in enumerate(poly))


def test_named_moments():
    assert named("eps").moments(4) == [1, 0, 0, 0, 0]
    assert named("unity").moments(4) == [1, 1, 1, 1, 1]
    assert named("singleton").moments(4) == [1, 1, 0, 0, 0]
    assert named("boolean_unity").moments(4) == [1, 1, 2, 6, 24]
    assert named("bell").moments(4) == [1, 1, 2, 5, 15]
    assert named("bernoulli").moments(4) == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]


def test_named_against_oracles():
    assert named("bell").moments(12) == [catalog.bell(n) for n in range(13)]
    assert named("bernoulli").moments(12) == [catalog.bernoulli(n) for n in range(13)]


def test_named_unknown():
    with pytest.raises(ValueError):
        named("nope")


def test_named_instances_are_shared():
    assert named("bell") is named("bell")


def test_delta():
    assert similar(delta(1), named("singleton"), 8)
    assert delta(2).moments(4) == [1, 0, 1, 0, 0]
    assert delta(3).moment(3) == 1
    with pytest.raises(ValueError):
        delta(0)


def test_from_moments():
    u = from_moments([1, 3, 9, 27])
    assert u.moment(2) == 9
    with pytest.raises(ValueError):
        u.moment(4)  # beyond the given data
    with pytest.raises(ValueError):
        from_moments([2, 1])


def test_from_gf():
    assert similar(from_gf([1, 1]), named("singleton"), 10)
    u = from_gf([1, 0, F(1, 2)])  # the same m.g.f. as delta(2)
    assert similar(u, delta(2), 10)
    with pytest.raises(ValueError):
        from_gf([2, 1])


def test_usum():
    rng = random.Random(0)
    a = random_umbra(rng, 8)
    assert similar(usum(a, named("eps")), a, 8)
    assert similar(usum(a, sdot(-1, a)), named("eps"), 8)
    two = usum(named("unity"), named("unity"))
    assert two.moments(8) == [F(2) ** n for n in range(9)]
    with pytest.raises(ValueError):
        usum()


def test_usum_is_binomial_convolution():
    rng = random.Random(1)
    a, b = random_umbra(rng, 8), random_umbra(rng, 8)
    s = usum(a, b)
    for n in range(9):
        expected = sum(comb(n, j) * a.moment(j) * b.moment(n - j) for j in range(n + 1))
        assert s.moment(n) == expected


def test_sdot():
    rng = random.Random(2)
    a = random_umbra(rng, 8)
    assert similar(sdot(0, a), named("eps"), 8)
    assert sdot(-1, named("unity")).moments(6) == [F(-1) ** n for n in range(7)]
    assert sdot(2, named("singleton")).moments(4) == [1, 2, 2, 0, 0]
    # rational exponent goes through exp/log
    half = sdot(F(1, 2), named("unity"))
    assert half.moments(4) == [F(1, 2) ** n for n in range(5)]


def test_udot():
    assert similar(udot(named("singleton"), named("bell")), named("unity"), 8)
    assert similar(udot(named("bell"), named("singleton")), named("unity"), 8)
    rng = random.Random(3)
    a = random_umbra(rng, 8)
    assert similar(udot(named("eps"), a), named("eps"), 8)
    assert similar(udot(a, named("eps")), named("eps"), 8)
    cauchy = udot(sdot(-1, named("bernoulli")), named("singleton"))
    assert cauchy.moments(3) == [1, F(1, 2), F(-1, 6), F(1, 4)]
    assert cauchy.moments(8) == [cauchy_integral(n) for n in range(9)]


def test_had():
    rng = random.Random(4)
    a = random_umbra(rng, 8)
    assert similar(had(a, named("unity")), a, 8)
    assert similar(had(a, named("eps")), named("eps"), 8)
    x = F(2, 3)
    powers = from_moments([x**n for n in range(9)])
    h = had(named("boolean_unity"), powers)
    assert all(h.moment(n) == factorial(n) * x**n for n in range(9))


def test_deriv():
    assert similar(deriv(named("eps")), named("singleton"), 8)
    assert similar(deriv(sdot(-1, named("bernoulli"))), named("unity"), 8)
    assert similar(deriv(named("boolean_unity")), named("boolean_unity"), 8)
    rng = random.Random(5)
    a = random_umbra(rng, 8)
    d = deriv(a)
    assert d.moment(0) == 1
    assert all(d.moment(n) == n * a.moment(n - 1) for n in range(1, 9))


def test_cinv():
    chi = named("singleton")
    assert similar(cinv(chi), chi, 8)
    assert similar(cinv(named("unity")), udot(chi, chi), 8)
    rng = random.Random(6)
    for _ in range(5):
        ms = [F(1)] + [F(rng.randint(-5, 5), rng.choice((1, 2, 3))) for _ in range(8)]
        ms[1] = F(rng.choice((1, -1, 2, 3)))
        a = from_moments(ms)
        assert similar(cinv(cinv(a)), a, 8)
    with pytest.raises(ValueError):
        cinv(delta(2))


def test_cinv_defining_property():
    # inv(a).bell.a is the singleton, both ways around
    rng = random.Random(7)
    ms = [F(1), F(2)] + [F(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(7)]
    a = from_moments(ms)
    assert similar(bellcompose(cinv(a), a), named("singleton"), 8)
    assert similar(bellcompose(a, cinv(a)), named("singleton"), 8)


def test_kappa():
    mb = sdot(-1, named("bernoulli"))
    assert similar(kappa(mb, mb), udot(mb, named("singleton")), 8)
    assert similar(kappa(named("boolean_unity")), named("singleton"), 8)
    rng = random.Random(8)
    a = random_umbra(rng, 8)
    assert similar(kappa(a, named("eps")), a, 8)
    # kappa is the composition with the inverse of the derivative umbra
    b = random_umbra(rng, 8)
    assert similar(kappa(a, b), bellcompose(a, cinv(deriv(b))), 8)


def test_lagrange_involution():
    rng = random.Random(9)
    for _ in range(5):
        a = random_umbra(rng, 10)
        assert similar(deriv(lagrange(a)), cinv(deriv(a)), 10)
        assert similar(lagrange(lagrange(a)), a, 10)


def test_abel_moment():
    rng = random.Random(10)
    s = random_umbra(rng, 10)
    a = random_umbra(rng, 10)
    assert abel_moment(s, named("eps"), 5) == s.moment(5)
    bu = named("boolean_unity")
    assert abel_moment(bu, bu, 3) == kappa(bu, bu).moment(3) == 0
    assert abel_moment(named("unity"), named("unity"), 2) == kappa(named("unity")).moment(2)
    for n in range(10, 0, -1):
        assert abel_moment(s, a, n) == kappa(s, a).moment(n)
    with pytest.raises(ValueError):
        abel_moment(s, a, 0)


def test_dot_via_bell():
    rng = random.Random(11)
    g = random_umbra(rng, 8)
    a = random_umbra(rng, 8)
    assert dot_via_bell(g, a, 0) == 1
    assert all(dot_via_bell(named("singleton"), named("bell"), n) == 1 for n in range(9))
    for n in range(9):
        assert dot_via_bell(g, a, n) == udot(g, a).moment(n)


def test_composition_moment_expansion():
    # moments of s.bell.D(a) expand binomially over moments of s and k.a
    rng = random.Random(12)
    s = random_umbra(rng, 10)
    a = random_umbra(rng, 10)
    comp = ucompose(s, a)
    for n in range(11):
        expected = sum(
            comb(n, k) * s.moment(k) * sdot(k, a).moment(n - k) for k in range(n + 1)
        )
        assert comp.moment(n) == expected


def test_derivative_of_composition_sum():
    # D(a + e.bell.D(a)) has the same moments as D(e).bell.D(a)
    rng = random.Random(13)
    for _ in range(3):
        a = random_umbra(rng, 10)
        e = random_umbra(rng, 10)
        lhs = deriv(usum(a, ucompose(e, a)))
        rhs = ucompose(deriv(e), a)
        assert similar(lhs, rhs, 10)


def test_power_identities_with_kappa_and_lagrange():
    rng = random.Random(14)
    for _ in range(3):
        a = random_umbra(rng, 10)
        for n in range(1, 11):
            for k in range(1, n + 1):
                assert n * sdot(k, lagrange(a)).moment(n - k) == k * sdot(-n, a).moment(n - k)
                assert n * sdot(k, a).moment(n - k) == k * sdot(n, kappa(a)).moment(n - k)


def test_left_associative_dot_chain_gives_composition():
    rng = random.Random(15)
    g = random_umbra(rng, 8)
    a = random_umbra(rng, 8)
    assert similar(udot(udot(g, named("bell")), a), bellcompose(g, a), 8)
    assert similar(ucompose(g, a), bellcompose(g, deriv(a)), 8)


def test_mgf_agrees_with_moments():
    rng = random.Random(16)
    u = random_umbra(rng, 9)
    f = u.mgf(9)
    for n in range(10):
        assert f.coeff(n) == u.moment(n) / factorial(n)


def test_cache_extension_is_deterministic():
    first = udot(named("bernoulli"), named("singleton"))
    low = first.moments(3)
    full = first.moments(9)
    assert full[:4] == low
    fresh = udot(from_moments(named("bernoulli").moments(9)), named("singleton"))
    assert fresh.moments(9) == full


def test_moment_negative_index():
    with pytest.raises(ValueError):
        named("unity").moment(-1)
