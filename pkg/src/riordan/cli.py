"""Command line front end.

Subcommands::

    riordan moments EXPR --n N
    riordan array   (--array NAME | --gamma E --alpha E) --weights W --rows R
    riordan sheffer (--array NAME | --gamma E --alpha E) --weights W --n N
    riordan verify  IDENTITY (--trials T --seed S [--order O] | explicit params)

Umbrae are written in the expression language of :mod:`riordan.exprlang`;
weights are ``exp``, ``ord`` or ``file:PATH`` where the file lists
c_0..c_rows as canonical rationals, one per line.  Output formats are
``table`` (default), ``csv`` and ``json``; rationals always render in the
canonical ``p/q`` text.

Exit codes: 0 on success (all checks passed), 1 when a verification
fails (the output ends with the first failing report), 2 on usage,
parse, or guard errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import catalog, identities
from .arrays import RiordanArray, WeightSeq
from .exact import parse_rational
from .exprlang import compile_umbra
from .identities import VerificationReport
from .umbra import named

IDENTITIES = (
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
    "ex2",
    "ex3",
    "ex4",
    "group-inverse",
    "group-assoc",
    "ftra",
)

FORMATS = ("table", "csv", "json")


# -- rendering ---------------------------------------------------------------------


def _table_rows(rows: list[list[str]]) -> str:
    ncols = max(len(r) for r in rows) if rows else 0
    widths = [max((len(r[c]) for r in rows if c < len(r)), default=0) for c in range(ncols)]
    return "\n".join("  ".join(r[c].rjust(widths[c]) for c in range(len(r))) for r in rows)


def _render_matrix(rows, fmt: str) -> str:
    cells = [[str(v) for v in row] for row in rows]
    if fmt == "table":
        return _table_rows(cells)
    if fmt == "csv":
        return "\n".join(",".join(row) for row in cells)
    return json.dumps({"rows": cells})


def _render_sequence(values, fmt: str) -> str:
    cells = [str(v) for v in values]
    if fmt == "table":
        return _table_rows([[str(i), c] for i, c in enumerate(cells)])
    if fmt == "csv":
        return "\n".join(f"{i},{c}" for i, c in enumerate(cells))
    return json.dumps({"values": cells})


def _render_polynomials(polys, fmt: str) -> str:
    cells = [[str(c) for c in p.coeffs] for p in polys]
    if fmt == "table":
        return _table_rows(cells)
    if fmt == "csv":
        return "\n".join(",".join(row) for row in cells)
    return json.dumps({"polynomials": cells})


def _render_reports(reports: list[VerificationReport], fmt: str) -> str:
    records = [r.to_record() for r in reports]
    if fmt == "json":
        return json.dumps({"reports": records})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "params", "lhs", "rhs", "passed", "seed"])
        for rec in records:
            writer.writerow(
                [
                    rec["name"],
                    json.dumps(rec["params"]),
                    json.dumps(rec["lhs"]),
                    json.dumps(rec["rhs"]),
                    rec["passed"],
                    rec["seed"],
                ]
            )
        return buf.getvalue().rstrip("\n")
    rows = [["name", "params", "lhs", "rhs", "passed"]]
    for rec in records:
        params = " ".join(f"{k}={json.dumps(v)}" for k, v in rec["params"].items())
        rows.append(
            [
                rec["name"],
                params,
                json.dumps(rec["lhs"]),
                json.dumps(rec["rhs"]),
                "pass" if rec["passed"] else "FAIL",
            ]
        )
    widths = [max(len(r[c]) for r in rows) for c in range(5)]
    return "\n".join("  ".join(r[c].ljust(widths[c]) for c in range(5)).rstrip() for r in rows)


# -- shared argument handling --------------------------------------------------------


def _parse_weights(spec: str) -> WeightSeq:
    if spec == "exp":
        return WeightSeq.exponential()
    if spec == "ord":
        return WeightSeq.ordinary()
    if spec.startswith("file:"):
        path = spec[5:]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                lines = [ln.strip() for ln in fh if ln.strip()]
        except OSError as exc:
            raise ValueError(f"cannot read weights file {path!r}: {exc}") from exc
        values = [parse_rational(ln) for ln in lines]
        if any(v == 0 for v in values):
            raise ValueError("weights file contains a zero entry")
        return WeightSeq.custom(values)
    raise ValueError(f"bad weights {spec!r}: use exp, ord or file:PATH")


def _resolve_array(args) -> RiordanArray:
    if getattr(args, "array", None):
        return catalog.named_array(args.array)
    if args.gamma is None or args.alpha is None:
        raise ValueError("needs --array NAME or both --gamma and --alpha")
    weights = _parse_weights(args.weights)
    return RiordanArray(compile_umbra(args.gamma), compile_umbra(args.alpha), weights)


def _need(args, *names: str):
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"this identity needs --{name.replace('_', '-')}")
        values.append(value)
    return values


def _need_umbra(args, name: str):
    (expr,) = _need(args, name)
    return compile_umbra(expr)


# -- commands --------------------------------------------------------------------------


def _cmd_moments(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    u = compile_umbra(args.expr)
    print(_render_sequence(u.moments(args.n), args.format))
    return 0


def _cmd_array(args) -> int:
    if args.rows < 0:
        raise ValueError("--rows must be >= 0")
    arr = _resolve_array(args)
    print(_render_matrix(arr.matrix(args.rows), args.format))
    return 0


def _cmd_sheffer(args) -> int:
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    arr = _resolve_array(args)
    polys = [arr.sheffer(i) for i in range(args.n + 1)]
    print(_render_polynomials(polys, args.format))
    return 0


def _random_trial(name: str, rng: random.Random, order: int) -> VerificationReport:
    if name in ("ex2", "ex3", "ex4"):
        n = rng.randint(0, order)
        if name == "ex3":
            return catalog.example_identity(
                "ex3_stirling_bernoulli", n=n, k=rng.randint(0, n)
            )
        if name == "ex2":
            return catalog.example_identity(
                "ex2_stirling_cauchy_bernoulli",
                n=n,
                k=rng.randint(0, n),
                m=rng.randint(-2, 4),
            )
        k = rng.randint((n + 1) // 2, n)
        return catalog.example_identity(
            "ex4_catalan_binomial", n=n, k=k, m=rng.randint(-2, 2 * k - n)
        )
    return identities.random_check(name, rng, order)


def _explicit_check(name: str, args) -> VerificationReport:
    if name == "abel1":
        (n,) = _need(args, "n")
        return identities.check_abel_I(
            _need_umbra(args, "gamma"), _need_umbra(args, "sigma"), _need_umbra(args, "alpha"), n
        )
    if name == "abel2":
        (n,) = _need(args, "n")
        return identities.check_abel_II(
            _need_umbra(args, "gamma"), _need_umbra(args, "eta"), _need_umbra(args, "alpha"), n
        )
    if name == "compmom":
        (n,) = _need(args, "n")
        return identities.check_comp_mom(
            _need_umbra(args, "sigma"), _need_umbra(args, "alpha"), n
        )
    if name == "lif":
        (n,) = _need(args, "n")
        return identities.check_lif(_need_umbra(args, "sigma"), _need_umbra(args, "alpha"), n)
    if name == "mother":
        n, k, m = _need(args, "n", "k", "m")
        return identities.check_mother(
            _need_umbra(args, "gamma"),
            _need_umbra(args, "alpha"),
            _need_umbra(args, "lam"),
            n,
            k,
            m,
        )
    if name == "nonrec":
        n, k, m = _need(args, "n", "k", "m")
        lam = compile_umbra(args.lam) if args.lam else named("eps")
        return identities.check_nonrec(_resolve_array(args), n, k, m, lam)
    if name in ("rec-h", "rec-v", "rec-d"):
        n, k, m = _need(args, "n", "k", "m")
        fn = {
            "rec-h": identities.rec_horizontal,
            "rec-v": identities.rec_vertical,
            "rec-d": identities.rec_diff,
        }[name]
        return fn(_resolve_array(args), n, k, m)
    if name in ("lagrangek1", "lagrangek2"):
        n, k = _need(args, "n", "k")
        which = 1 if name == "lagrangek1" else 2
        return identities.check_lagrangek(which, _need_umbra(args, "alpha"), n, k)
    if name == "ex2":
        n, k, m = _need(args, "n", "k", "m")
        return catalog.example_identity("ex2_stirling_cauchy_bernoulli", n=n, k=k, m=m)
    if name == "ex3":
        n, k = _need(args, "n", "k")
        return catalog.example_identity("ex3_stirling_bernoulli", n=n, k=k)
    if name == "ex4":
        n, k, m = _need(args, "n", "k", "m")
        return catalog.example_identity("ex4_catalan_binomial", n=n, k=k, m=m)
    raise ValueError(f"{name} runs on random instances only: pass --trials and --seed")


def _cmd_verify(args) -> int:
    name = args.identity
    if args.trials is not None:
        if args.trials < 1:
            raise ValueError("--trials must be >= 1")
        if args.seed is None:
            raise ValueError("--seed is required for randomized runs")
        order = args.order if args.order is not None else 8
        if order < 1:
            raise ValueError("--order must be >= 1")
        rng = random.Random(args.seed)
        reports: list[VerificationReport] = []
        all_passed = True
        for t in range(args.trials):
            rep = _random_trial(name, rng, order)
            rep.seed = args.seed
            rep.params = {"trial": t, **rep.params}
            reports.append(rep)
            if not rep.passed:
                all_passed = False
                break
        print(_render_reports(reports, args.format))
        return 0 if all_passed else 1
    rep = _explicit_check(name, args)
    print(_render_reports([rep], args.format))
    return 0 if rep.passed else 1


# -- parser ------------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="riordan",
        description="Exact umbral calculus and generalized Riordan arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("moments", help="print moments 0..n of an umbra expression")
    p.add_argument("expr")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_moments)

    def add_array_args(p):
        p.add_argument("--array", choices=catalog.NAMED_ARRAYS)
        p.add_argument("--gamma")
        p.add_argument("--alpha")
        p.add_argument("--weights", default="exp", help="exp, ord or file:PATH")

    p = sub.add_parser("array", help="print the triangle of a Riordan array")
    add_array_args(p)
    p.add_argument("--rows", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_array)

    p = sub.add_parser("sheffer", help="print Sheffer polynomials 0..n of an array")
    add_array_args(p)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_sheffer)

    p = sub.add_parser("verify", help="check an identity on explicit or random instances")
    p.add_argument("identity", choices=IDENTITIES)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--order", type=int)
    add_array_args(p)
    p.add_argument("--sigma", help="umbra expression")
    p.add_argument("--eta", help="umbra expression")
    p.add_argument("--lambda", dest="lam", help="umbra expression")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
