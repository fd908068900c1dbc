"""Acceptance suite: one criterion per test, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as the
criteria complete.  Every comparison is exact; the only tolerances are
the per-criterion runtime budgets.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from math import comb, factorial

from riordan import catalog
from riordan.arrays import RiordanArray, WeightSeq, subgroup, umbral_composition
from riordan.identities import (
    check_abel_I,
    check_abel_II,
    check_comp_mom,
    check_lif,
    nonrec_entry,
    random_array,
    random_umbra,
    rec_diff,
    rec_horizontal,
    rec_vertical,
)
from riordan.umbra import named, sdot, usum


def _criterion(num, label, limit, body):
    start = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"ACCEPTANCE {num:02d} {label}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < limit
    verdict = "PASS" if ok else "FAIL (over budget)"
    print(f"ACCEPTANCE {num:02d} {label}: {verdict} ({elapsed:.2f}s, limit {limit:g}s)")
    assert ok, f"{label}: {elapsed:.2f}s exceeded the {limit:g}s budget"


def _eye(rows):
    return [[F(1 if c == r else 0) for c in range(r + 1)] for r in range(rows + 1)]


def test_criterion_01_pascal_reproduction():
    def body():
        for name in ("pascal_exp", "pascal_ord"):
            arr = catalog.named_array(name)
            for n in range(13):
                for k in range(n + 1):
                    assert arr.entry(n, k) == comb(n, k), (name, n, k)

    _criterion(1, "pascal entries", 1.0, body)


def test_criterion_02_stirling_arrays():
    def body():
        s2 = catalog.named_array("stirling2")
        s1 = catalog.named_array("stirling1")
        for n in range(13):
            for k in range(n + 1):
                assert s2.entry(n, k) == catalog.stirling2(n, k)
                assert s1.entry(n, k) == catalog.stirling1(n, k)
        assert s2.multiply(s1).matrix(12) == _eye(12)
        assert s1.multiply(s2).matrix(12) == _eye(12)

    _criterion(2, "stirling arrays and inverse pair", 5.0, body)


def test_criterion_03_row_sums():
    def body():
        s2 = catalog.named_array("stirling2")
        assert [s2.row_sum(n) for n in range(13)] == [catalog.bell(n) for n in range(13)]
        s1 = catalog.named_array("stirling1")
        assert [s1.row_sum(n) for n in range(13)] == [1, 1] + [0] * 11
        for name in ("pascal_exp", "pascal_ord"):
            p = catalog.named_array(name)
            assert [p.row_sum(n) for n in range(13)] == [F(2) ** n for n in range(13)]

    _criterion(3, "row sums", 1.0, body)


def test_criterion_04_lagrange_inversion():
    def body():
        rng = random.Random(2024)
        for _ in range(200):
            s = random_umbra(rng, 10)
            a = random_umbra(rng, 10)
            for n in range(10, 0, -1):
                assert check_lif(s, a, n).passed

    _criterion(4, "lagrange inversion, three routes", 30.0, body)


def test_criterion_05_abel_identities():
    def body():
        rng = random.Random(2025)
        for _ in range(200):
            g, s, a = (random_umbra(rng, 10) for _ in range(3))
            assert check_abel_I(g, s, a, rng.randint(1, 10)).passed
        for _ in range(200):
            g, e, a = (random_umbra(rng, 10) for _ in range(3))
            assert check_abel_II(g, e, a, rng.randint(0, 10)).passed
        for _ in range(200):
            s, a = (random_umbra(rng, 10) for _ in range(2))
            assert check_comp_mom(s, a, rng.randint(0, 10)).passed

    _criterion(5, "umbral Abel identities", 60.0, body)


def test_criterion_06_nonrecursive_formula_invariance():
    def body():
        rng = random.Random(2026)
        eps = named("eps")
        for weights in (WeightSeq.exponential(), WeightSeq.ordinary()):
            arr = random_array(rng, 8, weights)
            lambdas = (eps, arr.alpha, sdot(-1, arr.alpha), random_umbra(rng, 8))
            for n in range(9):
                for k in range(n + 1):
                    expected = arr.entry(n, k)
                    for lam in lambdas:
                        for m in range(-2, k + 1):
                            assert nonrec_entry(arr, n, k, m, lam) == expected, (
                                weights.kind, n, k, m,
                            )

    _criterion(6, "entry formula invariant in m and lambda", 60.0, body)


def test_criterion_07_recurrences():
    def body():
        rng = random.Random(2027)
        arrays = [
            random_array(rng, 10, WeightSeq.exponential()),
            random_array(rng, 10, WeightSeq.ordinary()),
            catalog.named_array("stirling2"),
            catalog.named_array("stirling1"),
            catalog.named_array("pascal_ord"),
        ]
        for arr in arrays:
            for n in range(11):
                for k in range(n + 1):
                    m_values = sorted({-2, -1, 0, 1, min(2, k), k - 1, k} & set(range(-2, k + 1)))
                    for m in m_values:
                        assert rec_horizontal(arr, n, k, m).passed, (arr, n, k, m)
                        assert rec_vertical(arr, n, k, m).passed, (arr, n, k, m)
                    for m in sorted({-2, -1, 0, min(1, 2 * k - n), 2 * k - n}):
                        if m <= 2 * k - n:
                            assert rec_diff(arr, n, k, m).passed, (arr, n, k, m)

        # classical single-step and k-step forms, oracle side only
        C1 = [catalog.cauchy1(i) for i in range(11)]
        for n in range(1, 11):
            for k in range(1, n + 1):
                s2_col = F(n, k) * sum(
                    comb(n - 1, i) * F(1, i + 1) * catalog.stirling2(n - 1 - i, k - 1)
                    for i in range(n - k + 1)
                )
                assert s2_col == catalog.stirling2(n, k)
                s1_col = F(n, k) * sum(
                    comb(n - 1, i) * F((-1) ** i * factorial(i), i + 1)
                    * catalog.stirling1(n - 1 - i, k - 1)
                    for i in range(n - k + 1)
                )
                assert s1_col == catalog.stirling1(n, k)
                s2_row = F(n, k) * sum(
                    comb(k - 1 + i, i) * C1[i] * catalog.stirling2(n - 1, k - 1 + i)
                    for i in range(n - k + 1)
                )
                assert s2_row == catalog.stirling2(n, k)
                s1_row = F(n, k) * sum(
                    comb(k - 1 + i, i) * catalog.bernoulli(i) * catalog.stirling1(n - 1, k - 1 + i)
                    for i in range(n - k + 1)
                )
                assert s1_row == catalog.stirling1(n, k)
                s2_rowk = comb(n, k) * sum(
                    catalog.cauchy1_gen(k, i) * catalog.stirling2(n - k, i)
                    for i in range(n - k + 1)
                )
                assert s2_rowk == catalog.stirling2(n, k)
                s1_rowk = comb(n, k) * sum(
                    catalog.bernoulli_gen(k, i) * catalog.stirling1(n - k, i)
                    for i in range(n - k + 1)
                )
                assert s1_rowk == catalog.stirling1(n, k)

    _criterion(7, "horizontal, vertical and diagonal recurrences", 60.0, body)


def test_criterion_08_example_identities():
    def body():
        for n in range(11):
            for k in range(n + 1):
                assert catalog.example_identity("ex3_stirling_bernoulli", n=n, k=k).passed
        for m in (0, 1, 2):
            for n in range(9):
                for k in range(n + 1):
                    assert catalog.example_identity(
                        "ex2_stirling_cauchy_bernoulli", n=n, k=k, m=m
                    ).passed
        for n in range(13):
            for k in range(n + 1):
                for m in range(0, 2 * k - n + 1):
                    assert catalog.example_identity(
                        "ex4_catalan_binomial", n=n, k=k, m=m
                    ).passed

    _criterion(8, "stirling/cauchy/bernoulli and catalan identities", 10.0, body)


def test_criterion_09_group_axioms():
    def body():
        rng = random.Random(2028)
        eps = named("eps")
        for weights in (WeightSeq.exponential(), WeightSeq.ordinary()):
            for _ in range(2):
                a = random_array(rng, 8, weights)
                b = random_array(rng, 8, weights)
                c = random_array(rng, 8, weights)
                assert a.multiply(b).multiply(c).matrix(8) == a.multiply(b.multiply(c)).matrix(8)
                assert a.multiply(a.inverse()).matrix(8) == _eye(8)
                assert a.inverse().multiply(a).matrix(8) == _eye(8)

            g, s = random_umbra(rng, 8), random_umbra(rng, 8)
            # Appell closure and inverse
            prod = subgroup("appell", g, weights).multiply(subgroup("appell", s, weights))
            assert prod.matrix(8) == subgroup("appell", usum(g, s), weights).matrix(8)
            inv = subgroup("appell", g, weights).inverse()
            assert inv.matrix(8) == subgroup("appell", sdot(-1, g), weights).matrix(8)
            # Associated closure and inverse
            al, rho = random_umbra(rng, 8), random_umbra(rng, 8)
            prod = subgroup("associated", al, weights).multiply(subgroup("associated", rho, weights))
            assert all(prod.entry(n, 0) == (1 if n == 0 else 0) for n in range(9))
            from riordan.umbra import lagrange, ucompose

            inv = subgroup("associated", al, weights).inverse()
            assert inv.matrix(8) == subgroup("associated", lagrange(al), weights).matrix(8)
            # Bell closure and inverse
            prod = subgroup("bell", al, weights).multiply(subgroup("bell", rho, weights))
            merged = usum(al, ucompose(rho, al))
            assert prod.matrix(8) == subgroup("bell", merged, weights).matrix(8)
            inv = subgroup("bell", al, weights).inverse()
            assert inv.matrix(8) == subgroup("bell", lagrange(al), weights).matrix(8)
            # factorizations
            full = RiordanArray(g, al, weights)
            assert (
                subgroup("appell", g, weights)
                .multiply(subgroup("associated", al, weights))
                .matrix(8)
                == full.matrix(8)
            )
            assert (
                RiordanArray(usum(g, sdot(-1, al)), eps, weights)
                .multiply(subgroup("bell", al, weights))
                .matrix(8)
                == full.matrix(8)
            )

    _criterion(9, "group axioms, subgroups, factorizations", 30.0, body)


def test_criterion_10_sheffer_isomorphism():
    def body():
        rng = random.Random(2029)
        for weights in (WeightSeq.exponential(), WeightSeq.ordinary()):
            for _ in range(3):
                a = random_array(rng, 6, weights)
                b = random_array(rng, 6, weights)
                prod = a.multiply(b)
                for n in range(7):
                    assert umbral_composition(a, b, n) == prod.sheffer(n)
        s1 = catalog.named_array("stirling1")
        for n in range(11):
            poly = [F(1)]
            for j in range(n):
                poly = [
                    (F(0) if i == 0 else poly[i - 1]) - j * (poly[i] if i < len(poly) else F(0))
                    for i in range(len(poly) + 1)
                ]
            assert list(s1.sheffer(n).coeffs) == poly  # falling factorials
        s2 = catalog.named_array("stirling2")
        for n in range(11):
            expected = [F(catalog.stirling2(n, k)) for k in range(n + 1)]
            while len(expected) > 1 and expected[-1] == 0:
                expected.pop()
            assert list(s2.sheffer(n).coeffs) == expected  # exponential polynomials

    _criterion(10, "sheffer group isomorphism", 10.0, body)


def test_criterion_11_cli_contract():
    def body():
        base = [sys.executable, "-m", "riordan.cli"]

        def cli(*argv):
            return subprocess.run(base + list(argv), capture_output=True, text=True)

        r = cli("verify", "rec-d", "--array", "pascal_ord", "--n", "6", "--k", "5", "--m", "4")
        assert r.returncode == 0, r.stderr
        lif_args = ("verify", "lif", "--trials", "100", "--seed", "7", "--order", "10")
        first = cli(*lif_args)
        assert first.returncode == 0, first.stderr
        second = cli(*lif_args)
        assert second.returncode == 0
        assert first.stdout == second.stdout  # byte-identical seeded runs
        r = cli("verify", "rec-h", "--array", "stirling2", "--n", "4", "--k", "1", "--m", "3")
        assert r.returncode == 2

    _criterion(11, "cli exit codes and reproducibility", 5.0, body)
