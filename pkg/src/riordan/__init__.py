"""Exact umbral calculus and generalized Riordan arrays over the rationals.

Everything in this package computes with arbitrary-precision rationals;
there is no floating point and no tolerance anywhere.  The building
blocks are truncated formal power series (:mod:`riordan.series`), umbrae
as lazy exact moment sequences (:mod:`riordan.umbra`), weighted Riordan
arrays and Sheffer sequences (:mod:`riordan.arrays`), identity checkers
(:mod:`riordan.identities`), classical sequence oracles
(:mod:`riordan.catalog`), a small expression language
(:mod:`riordan.exprlang`) and a command line front end
(:mod:`riordan.cli`).
"""

from .exact import Rational, bell_partial, binomial, falling_factorial
from .series import Series
from .umbra import (
    Umbra,
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
from .arrays import Polynomial, RiordanArray, WeightSeq, subgroup, umbral_composition

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "binomial",
    "falling_factorial",
    "bell_partial",
    "Series",
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
    "WeightSeq",
    "RiordanArray",
    "Polynomial",
    "subgroup",
    "umbral_composition",
]
