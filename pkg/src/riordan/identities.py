"""Exact verification of the umbral and Riordan-array identities.

Every checker computes both sides by independent routes and reports
equality.  All comparisons are exact; there is no tolerance anywhere.
Checkers that compare more than two routes chain them: ``lhs`` holds the
values [v1, .., v_{r-1}] and ``rhs`` holds [v2, .., v_r], so the report
passes exactly when every route agrees.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Any

from .arrays import RiordanArray, WeightSeq
from .series import Series
from .umbra import Umbra, abel_moment, from_moments, kappa, sdot, ucompose, usum

__all__ = [
    "VerificationReport",
    "make_report",
    "check_abel_classical",
    "check_abel_I",
    "check_abel_II",
    "check_comp_mom",
    "check_lif",
    "check_mother",
    "nonrec_entry",
    "nonrec_entry_related",
    "nonrec_entry_exp",
    "check_nonrec",
    "rec_horizontal",
    "rec_vertical",
    "rec_diff",
    "check_lagrangek",
    "random_umbra",
    "random_weights",
    "random_array",
    "random_check",
    "RANDOM_CHECKS",
]


@dataclass
class VerificationReport:
    name: str
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    passed: bool
    seed: int | None = None

    def to_record(self) -> dict[str, Any]:
        """A JSON-friendly record with canonical rational text."""
        return {
            "name": self.name,
            "params": {k: _canon(v) for k, v in self.params.items()},
            "lhs": _canon(self.lhs),
            "rhs": _canon(self.rhs),
            "passed": self.passed,
            "seed": self.seed,
        }


def _canon(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_canon(v) for v in value]
    if isinstance(value, Umbra):
        return value.name
    return value


def make_report(name, params, lhs, rhs, seed=None) -> VerificationReport:
    return VerificationReport(name, params, lhs, rhs, lhs == rhs, seed)


def _chain_report(name, params, values, seed=None) -> VerificationReport:
    return make_report(name, params, list(values[:-1]), list(values[1:]), seed)


# -- Abel identities ------------------------------------------------------------


def check_abel_classical(x, y, a, n: int) -> VerificationReport:
    """(x+y)^n = sum_k C(n,k) (y+ka)^(n-k) x(x-ka)^(k-1) over rationals."""
    x, y, a = Fraction(x), Fraction(y), Fraction(a)
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = (x + y) ** n
    rhs = Fraction(0)
    for k in range(n + 1):
        abel = Fraction(1) if k == 0 else x * (x - k * a) ** (k - 1)
        rhs += comb(n, k) * (y + k * a) ** (n - k) * abel
    return make_report("abel-classical", {"x": x, "y": y, "a": a, "n": n}, lhs, rhs)


def _abel_factor(s: Umbra, a: Umbra, k: int) -> Fraction:
    # E[s (s + (-k).a)^(k-1)], read as 1 at k = 0.
    return Fraction(1) if k == 0 else abel_moment(s, a, k)


def check_abel_I(g: Umbra, s: Umbra, a: Umbra, n: int) -> VerificationReport:
    """E[(g+s)^n] expanded through the umbral Abel polynomials of (s, a)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = usum(g, s).moment(n)
    rhs = Fraction(0)
    for k in range(n + 1):
        rhs += (
            comb(n, k)
            * usum(g, sdot(k, a)).moment(n - k)
            * _abel_factor(s, a, k)
        )
    params = {"gamma": g, "sigma": s, "alpha": a, "n": n}
    return make_report("abel-I", params, lhs, rhs)


def check_abel_II(g: Umbra, e: Umbra, a: Umbra, n: int) -> VerificationReport:
    """E[(g + e.bell.D(a))^n] = sum_k C(n,k) E[(g+k.a)^(n-k)] E[e^k]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    lhs = usum(g, ucompose(e, a)).moment(n)
    em = e.moments(n)
    rhs = Fraction(0)
    for k in range(n + 1):
        rhs += comb(n, k) * usum(g, sdot(k, a)).moment(n - k) * em[k]
    params = {"gamma": g, "eta": e, "alpha": a, "n": n}
    return make_report("abel-II", params, lhs, rhs)


def check_comp_mom(s: Umbra, a: Umbra, n: int) -> VerificationReport:
    """The binomial expansion of composition-umbra moments, checked both
    at moment level and at ordinary-coefficient level."""
    if n < 0:
        raise ValueError("n must be >= 0")
    m_lhs = ucompose(s, a).moment(n)
    sm = s.moments(n)
    m_rhs = Fraction(0)
    for k in range(n + 1):
        m_rhs += comb(n, k) * sm[k] * sdot(k, a).moment(n - k)

    # [t^n] f_s(t f_a) = sum_k [t^k] f_s [t^(n-k)] f_a^k
    c_lhs = ucompose(s, a).mgf(n).coeff(n)
    c_rhs = Fraction(0)
    fs = s.mgf(n)
    fa = a.mgf(n - 1) if n >= 1 else None
    for k in range(n + 1):
        if k == 0:
            c_rhs += fs.coeff(0) * (1 if n == 0 else 0)
        else:
            c_rhs += fs.coeff(k) * fa.truncated(n - k).pow(k).coeff(n - k)
    params = {"sigma": s, "alpha": a, "n": n}
    return make_report("comp-mom", params, [m_lhs, c_lhs], [m_rhs, c_rhs])


def check_lif(s: Umbra, a: Umbra, n: int) -> VerificationReport:
    """Lagrange inversion three ways: the Abel-polynomial moment, the
    reversion route, and the classical coefficient identity
    [t^(n-1)] f_s' f_a^(-n) = n [t^n] f_s((t f_a)^<-1>)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    v_abel = abel_moment(s, a, n)
    v_kappa = kappa(s, a).moment(n)
    fs = s.mgf(n)
    fa = a.mgf(n - 1)
    v_coeff = factorial(n - 1) * (fs.deriv() * fa.pow(-n)).coeff(n - 1)
    params = {"sigma": s, "alpha": a, "n": n}
    return _chain_report("lif", params, [v_abel, v_kappa, v_coeff])


def check_mother(g: Umbra, a: Umbra, l: Umbra, n: int, k: int, m: int) -> VerificationReport:
    """The Abel expansion of E[(g+k.a)^(n-k)] across the splitting
    k.a = (k-m).a + m.a, with Abel factors taken against l."""
    if n - k < 0:
        raise ValueError("requires n - k >= 0")
    lhs = usum(g, sdot(k, a)).moment(n - k)
    ma = sdot(m, a)
    rhs = Fraction(0)
    for i in range(n - k + 1):
        rhs += (
            comb(n - k, i)
            * usum(g, sdot(k - m, a), sdot(i, l)).moment(n - k - i)
            * _abel_factor(ma, l, i)
        )
    params = {"gamma": g, "alpha": a, "lambda": l, "n": n, "k": k, "m": m}
    return make_report("mother", params, lhs, rhs)


# -- the non-recursive entry formula ---------------------------------------------


def _check_indices(n: int, k: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"requires n >= k >= 0, got n={n}, k={k}")


def nonrec_entry(arr: RiordanArray, n: int, k: int, m: int, l: Umbra) -> Fraction:
    """The (n, k) entry through the shifted Abel expansion:

    (c_n/c_k) sum_i E[(m.K(alpha,l))^i]/i!
                    * E[(gamma+(k-m).alpha+i.l)^(n-k-i)]/(n-k-i)!

    The value is independent of both m and l and equals entry(n, k).
    """
    _check_indices(n, k)
    w = arr.weights
    ku = sdot(m, kappa(arr.alpha, l))
    total = Fraction(0)
    for i in range(n - k + 1):
        total += (
            ku.moment(i)
            / factorial(i)
            * usum(arr.gamma, sdot(k - m, arr.alpha), sdot(i, l)).moment(n - k - i)
            / factorial(n - k - i)
        )
    return w.c(n) / w.c(k) * total


def nonrec_entry_related(arr: RiordanArray, n: int, k: int, m: int, l: Umbra) -> Fraction:
    """The same value written as a weighted sum over row n-k of the
    related array (gamma + (k-m).alpha, l)."""
    _check_indices(n, k)
    w = arr.weights
    related = RiordanArray(usum(arr.gamma, sdot(k - m, arr.alpha)), l, w)
    ku = sdot(m, kappa(arr.alpha, l))
    total = Fraction(0)
    for i in range(n - k + 1):
        total += w.c(i) * ku.moment(i) / factorial(i) * related.entry(n - k, i)
    return w.c(n) / (w.c(k) * w.c(n - k)) * total


def nonrec_entry_exp(arr: RiordanArray, n: int, k: int, m: int, l: Umbra) -> Fraction:
    """The binomial special case for exponential weights."""
    if arr.weights.kind != "exponential":
        raise ValueError("this form applies to exponential weights only")
    _check_indices(n, k)
    ku = sdot(m, kappa(arr.alpha, l))
    total = Fraction(0)
    for i in range(n - k + 1):
        total += (
            comb(n - k, i)
            * ku.moment(i)
            * usum(arr.gamma, sdot(k - m, arr.alpha), sdot(i, l)).moment(n - k - i)
        )
    return comb(n, k) * total


def check_nonrec(arr: RiordanArray, n: int, k: int, m: int, l: Umbra) -> VerificationReport:
    values = [
        arr.entry(n, k),
        nonrec_entry(arr, n, k, m, l),
        nonrec_entry_related(arr, n, k, m, l),
    ]
    if arr.weights.kind == "exponential":
        values.append(nonrec_entry_exp(arr, n, k, m, l))
    params = {"n": n, "k": k, "m": m, "lambda": l, "weights": arr.weights.kind}
    return _chain_report("nonrec", params, values)


# -- recurrence relations ---------------------------------------------------------


def rec_horizontal(arr: RiordanArray, n: int, k: int, m: int) -> VerificationReport:
    """entry(n,k) against the order-m horizontal recurrence with
    coefficients E[(m.kappa(alpha))^i]/i!."""
    _check_indices(n, k)
    if m > k:
        raise ValueError(f"horizontal recurrence requires m <= k, got m={m}, k={k}")
    w = arr.weights
    ku = sdot(m, kappa(arr.alpha))
    total = Fraction(0)
    for i in range(n - k + 1):
        total += w.c(k - m + i) * ku.moment(i) / factorial(i) * arr.entry(n - m, k - m + i)
    rhs = w.c(n) / (w.c(k) * w.c(n - m)) * total
    params = {"n": n, "k": k, "m": m, "weights": w.kind}
    return make_report("rec-h", params, arr.entry(n, k), rhs)


def rec_vertical(arr: RiordanArray, n: int, k: int, m: int) -> VerificationReport:
    """entry(n,k) against the order-m vertical recurrence with
    coefficients E[(m.alpha)^i]/i!; m may be negative."""
    _check_indices(n, k)
    if m > k:
        raise ValueError(f"vertical recurrence requires m <= k, got m={m}, k={k}")
    w = arr.weights
    ma = sdot(m, arr.alpha)
    total = Fraction(0)
    for i in range(n - k + 1):
        total += (
            Fraction(1)
            / w.c(n - m - i)
            * ma.moment(i)
            / factorial(i)
            * arr.entry(n - m - i, k - m)
        )
    rhs = w.c(n) * w.c(k - m) / w.c(k) * total
    params = {"n": n, "k": k, "m": m, "weights": w.kind}
    return make_report("rec-v", params, arr.entry(n, k), rhs)


def rec_diff(arr: RiordanArray, n: int, k: int, m: int) -> VerificationReport:
    """entry(n,k) against the diagonal recurrence whose coefficients are
    E[(-m.kappa(-1.alpha))^i]/i!, cross-checked against the classical
    coefficients i! [t^i] f_alpha((t/f_alpha)^<-1>)^m."""
    _check_indices(n, k)
    if 2 * k - n < m:
        raise ValueError(f"diagonal recurrence requires 2k - n >= m, got n={n}, k={k}, m={m}")
    w = arr.weights
    ku = sdot(-m, kappa(sdot(-1, arr.alpha)))
    top = n - k
    coeffs_umbral = [ku.moment(i) for i in range(top + 1)]

    # classical route for the same coefficient sequence
    if top == 0:
        coeffs_classic = [Fraction(1)]
    else:
        fa = arr.alpha.mgf(top)
        inv = Series.one(top - 1) / arr.alpha.mgf(top - 1)
        t_over = Series((Fraction(0),) + inv.coeffs)  # t/f_alpha at order top
        comp = fa.compose(t_over.revert())
        powm = comp.pow(m)
        coeffs_classic = [factorial(i) * powm.coeff(i) for i in range(top + 1)]

    def rhs_with(coeffs: list[Fraction]) -> Fraction:
        total = Fraction(0)
        for i in range(top + 1):
            total += (
                w.c(k - m - i)
                / w.c(n - m - 2 * i)
                * coeffs[i]
                / factorial(i)
                * arr.entry(n - m - 2 * i, k - m - i)
            )
        return w.c(n) / w.c(k) * total

    values = [arr.entry(n, k), rhs_with(coeffs_umbral), rhs_with(coeffs_classic)]
    params = {"n": n, "k": k, "m": m, "weights": w.kind}
    return _chain_report("rec-d", params, values)


def check_lagrangek(which: int, a: Umbra, n: int, k: int) -> VerificationReport:
    """The two power identities linking a, kappa(a) and lagrange(a):

    which=1:  n E[(k.L_a)^(n-k)] = k E[(-n.a)^(n-k)]
    which=2:  n E[(k.a)^(n-k)]   = k E[(n.K_a)^(n-k)]
    """
    if not 1 <= k <= n:
        raise ValueError(f"requires 1 <= k <= n, got n={n}, k={k}")
    if which == 1:
        lhs = n * sdot(k, sdot(-1, kappa(a))).moment(n - k)
        rhs = k * sdot(-n, a).moment(n - k)
    elif which == 2:
        lhs = n * sdot(k, a).moment(n - k)
        rhs = k * sdot(n, kappa(a)).moment(n - k)
    else:
        raise ValueError("which must be 1 or 2")
    params = {"which": which, "alpha": a, "n": n, "k": k}
    return make_report(f"lagrangek{which}", params, lhs, rhs)


# -- seeded random instances -------------------------------------------------------


def random_umbra(rng: random.Random, order: int) -> Umbra:
    """Moments with numerators in [-5, 5] and denominators in {1,2,3,4};
    moment 0 is fixed at 1."""
    ms = [Fraction(1)]
    for _ in range(order):
        ms.append(Fraction(rng.randint(-5, 5), rng.choice((1, 2, 3, 4))))
    return from_moments(ms)


def random_weights(rng: random.Random) -> WeightSeq:
    return WeightSeq.exponential() if rng.randint(0, 1) else WeightSeq.ordinary()


def random_array(rng: random.Random, order: int, weights: WeightSeq | None = None) -> RiordanArray:
    w = weights if weights is not None else random_weights(rng)
    return RiordanArray(random_umbra(rng, order), random_umbra(rng, order), w)


RANDOM_CHECKS = (
    "abel1",
    "abel2",
    "compmom",
    "lif",
    "mother",
    "nonrec",
    "rec-h",
    "rec-v",
    "rec-d",
    "lagrangek1",
    "lagrangek2",
    "group-inverse",
    "group-assoc",
    "ftra",
)


def random_check(name: str, rng: random.Random, order: int) -> VerificationReport:
    """One seeded random instance of the named checker.

    This is the canonical instance shape for randomized verification;
    the command line `verify` runs exactly these trials.
    """
    if name == "abel1":
        g, s, a = random_umbra(rng, order), random_umbra(rng, order), random_umbra(rng, order)
        return check_abel_I(g, s, a, rng.randint(1, order))
    if name == "abel2":
        g, e, a = random_umbra(rng, order), random_umbra(rng, order), random_umbra(rng, order)
        return check_abel_II(g, e, a, rng.randint(0, order))
    if name == "compmom":
        s, a = random_umbra(rng, order), random_umbra(rng, order)
        return check_comp_mom(s, a, rng.randint(0, order))
    if name == "lif":
        s, a = random_umbra(rng, order), random_umbra(rng, order)
        return check_lif(s, a, rng.randint(1, order))
    if name == "mother":
        g, a, l = random_umbra(rng, order), random_umbra(rng, order), random_umbra(rng, order)
        k = rng.randint(0, order)
        n = rng.randint(k, order)
        return check_mother(g, a, l, n, k, rng.randint(-3, 3))
    if name == "nonrec":
        arr = random_array(rng, order)
        n = rng.randint(0, order)
        k = rng.randint(0, n)
        m = rng.randint(-2, k)
        return check_nonrec(arr, n, k, m, random_umbra(rng, order))
    if name in ("rec-h", "rec-v"):
        arr = random_array(rng, order)
        n = rng.randint(0, order)
        k = rng.randint(0, n)
        m = rng.randint(-2, k)
        fn = rec_horizontal if name == "rec-h" else rec_vertical
        return fn(arr, n, k, m)
    if name == "rec-d":
        arr = random_array(rng, order)
        n = rng.randint(0, order)
        k = rng.randint((n + 1) // 2, n)
        m = rng.randint(-2, 2 * k - n)
        return rec_diff(arr, n, k, m)
    if name in ("lagrangek1", "lagrangek2"):
        a = random_umbra(rng, order)
        n = rng.randint(1, order)
        k = rng.randint(1, n)
        return check_lagrangek(1 if name == "lagrangek1" else 2, a, n, k)
    rows = min(order, 8)
    if name == "group-inverse":
        arr = random_array(rng, order)
        eye = [[Fraction(1 if c == r else 0) for c in range(r + 1)] for r in range(rows + 1)]
        return make_report(
            "group-inverse",
            {"weights": arr.weights.kind, "rows": rows},
            arr.multiply(arr.inverse()).matrix(rows),
            eye,
        )
    if name == "group-assoc":
        w = random_weights(rng)
        a = random_array(rng, order, w)
        b = random_array(rng, order, w)
        c = random_array(rng, order, w)
        return make_report(
            "group-assoc",
            {"weights": w.kind, "rows": rows},
            a.multiply(b).multiply(c).matrix(rows),
            a.multiply(b.multiply(c)).matrix(rows),
        )
    if name == "ftra":
        arr = random_array(rng, order)
        eta = random_umbra(rng, order)
        return make_report(
            "ftra",
            {"weights": arr.weights.kind, "order": order},
            arr.apply(eta, order),
            arr.apply_closed(eta, order),
        )
    raise ValueError(f"unknown random check {name!r}")
