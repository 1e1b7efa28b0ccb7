"""``orthotrig`` command line: gen, check, sweep, apply, bench.

Exit codes: 0 success (or orthogonal), 1 checked property failed,
2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import io as tio
from .signal import NotOrthogonalError, forward, inverse, lcg_signal
from .transforms import build
from .types import DwtParams, ParamsPQR, TransformFamily
from .validation import (
    NotParameterizedError,
    check_conditions,
    default_tolerance,
    gram_report,
    sweep,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _family(name: str) -> TransformFamily:
    try:
        return TransformFamily.from_name(name)
    except ValueError:
        known = ", ".join(f.value for f in TransformFamily)
        raise UsageError(f"unknown family {name!r}; expected one of: {known}") from None


def _params_from_args(fam: TransformFamily, args):
    pqr = [getattr(args, k, None) for k in ("p", "q", "r")]
    dwt = [getattr(args, k, None) for k in ("alpha", "beta", "gamma")]
    if fam.takes_pqr:
        if any(v is not None for v in dwt):
            raise UsageError(f"{fam.value} takes --p/--q/--r, not --alpha/--beta/--gamma")
        missing = [k for k, v in zip("pqr", pqr) if v is None]
        if missing:
            raise UsageError(f"{fam.value} requires " + ", ".join(f"--{k}" for k in missing))
        try:
            return ParamsPQR(*pqr)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if fam is TransformFamily.DWT_UNIFIED:
        if any(v is not None for v in pqr):
            raise UsageError("dwt-unified takes --alpha/--beta/--gamma, not --p/--q/--r")
        missing = [k for k, v in zip(("alpha", "beta", "gamma"), dwt) if v is None]
        if missing:
            raise UsageError("dwt-unified requires " + ", ".join(f"--{k}" for k in missing))
        try:
            return DwtParams(*dwt)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise UsageError(f"bad W-transform parameters: {exc}") from None
    if any(v is not None for v in pqr + dwt):
        raise UsageError(f"family {fam.value} takes no parameters")
    return None


def _build_from_args(args):
    fam = _family(args.family)
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    params = _params_from_args(fam, args)
    try:
        return build(fam, args.n, params)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_or_build(args):
    if args.matrix is not None:
        if args.family is not None:
            raise UsageError("give either --matrix or --family, not both")
        try:
            return tio.read_matrix(args.matrix)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read matrix {args.matrix}: {exc}") from None
    if args.family is None:
        raise UsageError("one of --matrix or --family is required")
    return _build_from_args(args)


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def cmd_gen(args) -> int:
    m = _build_from_args(args)
    try:
        tio.write_matrix(args.out, m)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    return EXIT_OK


def cmd_check(args) -> int:
    m = _load_or_build(args)
    if not m.is_square:
        raise UsageError(f"matrix is not square: {m.rows}x{m.cols}")
    tol = default_tolerance(m.rows) if args.tol is None else args.tol
    if not tol > 0:
        raise UsageError("--tol must be positive")
    cond = None
    if m.family is not None:
        # classic DWTs carry their (alpha, beta, gamma) only as metadata
        own = m.family.takes_pqr or m.family is TransformFamily.DWT_UNIFIED
        cond = check_conditions(m.family, m.n, m.params if own else None).satisfied
    gram = gram_report(m)
    report = tio.make_report(m, gram, cond, tol)
    sys.stdout.write(tio.dump_json(report))
    return EXIT_OK if report["orthogonal"] else EXIT_FAIL


def _int_list(text: str) -> List[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def cmd_sweep(args) -> int:
    fam = _family(args.family)
    if not fam.takes_pqr:
        raise UsageError(f"family {fam.value} takes no p,q,r")
    for name in ("p_max", "q_max", "r_max"):
        if getattr(args, name) < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 1")
    if min(args.n) < 1:
        raise UsageError("--n values must be >= 1")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    try:
        report = sweep(fam, args.n, args.p_max, args.q_max, args.r_max, args.tol)
    except (NotParameterizedError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    _write_text(args.out, tio.sweep_to_csv(report))
    bad = report.violations()
    for row in bad:
        print(
            f"theorem violation: {row.family.value} n={row.n} "
            f"p={row.params.p} q={row.params.q} r={row.params.r} dev={row.gram_max_dev}",
            file=sys.stderr,
        )
    return EXIT_FAIL if bad else EXIT_OK


def cmd_apply(args) -> int:
    m = _load_or_build(args)
    try:
        with open(args.signal, encoding="ascii") as fh:
            x = tio.parse_vector_csv(fh.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read signal {args.signal}: {exc}") from None
    expected = m.rows if args.inverse else m.cols
    if x.shape[0] != expected:
        raise UsageError(f"signal length mismatch: expected {expected}, got {x.shape[0]}")
    if args.inverse:
        try:
            y = inverse(m, x)
        except NotOrthogonalError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_FAIL
    else:
        y = forward(m, x).values
    _write_text(args.out, tio.vector_to_csv(y))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.repeats < 1:
        raise UsageError("--repeats must be >= 1")
    m = _build_from_args(args)
    t0 = time.perf_counter()
    for _ in range(args.repeats):
        m = _build_from_args(args)
    build_ms = (time.perf_counter() - t0) * 1e3 / args.repeats
    x = lcg_signal(m.cols)
    forward(m, x)  # warm-up (jit compilation)
    t0 = time.perf_counter()
    for _ in range(args.repeats):
        forward(m, x)
    apply_ms = (time.perf_counter() - t0) * 1e3 / args.repeats
    out = {"build_ms": build_ms, "apply_ms_per_signal": apply_ms, "n": args.n, "repeats": args.repeats}
    sys.stdout.write(json.dumps(out) + "\n")
    return EXIT_OK


def _add_family_args(p, required_family=True):
    p.add_argument("--family", required=required_family, help="transform family name, e.g. gen-dct3")
    p.add_argument("--n", type=int, help="size parameter N")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--alpha", help="rational literal num/den (dwt-unified)")
    p.add_argument("--beta", help="rational literal num/den (dwt-unified)")
    p.add_argument("--gamma", type=int, help="positive integer (dwt-unified)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthotrig",
        description="Parameterized discrete trigonometric transforms and orthogonality checks.",
    )
    parser.add_argument("--version", action="version", version="%(prog)s 0.1.0")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a transform matrix as CSV (+ JSON sidecar)")
    _add_family_args(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="Gram-matrix orthogonality report (JSON on stdout)")
    p.add_argument("--matrix", help="CSV matrix file")
    _add_family_args(p, required_family=False)
    p.add_argument("--tol", type=float, default=None, help="default 1e-10 (1e-13*N above N=1000)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="scan a (n, p, q, r) box and write CSV rows")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated sizes")
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out", default=None, help="output CSV (stdout if omitted)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("apply", help="apply a transform (or its transpose) to a signal")
    p.add_argument("--matrix", help="CSV matrix file")
    _add_family_args(p, required_family=False)
    p.add_argument("--signal", required=True, help="CSV with one value per line")
    p.add_argument("--inverse", action="store_true", help="apply the transpose (orthogonality-gated)")
    p.add_argument("--out", default=None, help="output CSV (stdout if omitted)")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("bench", help="time matrix construction and application")
    _add_family_args(p)
    p.add_argument("--repeats", type=int, default=10)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"orthotrig {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:  # console_scripts hook
    sys.exit(main())


__all__ = ["main", "make_parser"]
