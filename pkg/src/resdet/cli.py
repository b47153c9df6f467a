"""Command line interface.

Subcommands:

  det       one determinant (modular, optionally exact and Pfaffian)
  verify    sweep one identity check over a prime range
  ekm       exceptional prime sets, by criterion and/or direct scan
  char      power-residue character classification of a parameter
  selftest  run every property suite

Output is JSON lines by default; --format table switches to key=value
lines.  Exit status: 0 clean, 1 when a verification/selftest/search found
a violation or left a cofactor unfactored, 2 on bad parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from .ekm import ekm_by_criterion, ekm_by_scan
from .finite_field import chi_k, prime_modulus
from .residue_matrix import (
    build_matrix,
    det_exact,
    det_mod_p,
    kth_residues,
    pfaffian_mod_p,
)
from .selftest import run_selftest
from .verify import CHECKS, SweepSummary, run_sweep


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj))
    else:
        print(" ".join(f"{k}={v}" for k, v in obj.items()))


def _intlist(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _cmd_det(args: argparse.Namespace) -> int:
    res = kth_residues(args.p, args.k)
    mat = build_matrix(res, args.n, args.d)
    out: dict = {
        "p": args.p,
        "k": args.k,
        "n": args.n,
        "d": args.d,
        "q": res.q,
        "det": det_mod_p(mat),
    }
    if args.exact:
        out["exact"] = str(det_exact(res, args.n, args.d))
    if args.pfaffian:
        out["pfaffian"] = pfaffian_mod_p(mat)
    _emit(out, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    summary = SweepSummary(check=args.check)
    for rec in run_sweep(
        args.check,
        args.pmax,
        klist=args.klist,
        mlist=args.mlist,
        dlist=args.dlist,
        jobs=args.jobs,
    ):
        summary.add(rec)
        _emit(rec.to_dict(), args.format)
    _emit(summary.to_dict(), args.format)
    return 0 if summary.violated == 0 else 1


def _factorization_dict(f) -> dict:
    return {
        "n": str(f.n),
        "factors": [[str(q), e] for q, e in f.factors],
        "unfactored": [str(u) for u in f.unfactored],
    }


def _report_dict(rep, route: str) -> dict:
    out: dict = {
        "route": route,
        "k": rep.k,
        "m": rep.m,
        "bound": rep.bound,
        "members": list(rep.members),
        "members_within_bound": list(rep.members_within_bound),
        "provenance": {str(p): tag for p, tag in rep.provenance},
    }
    if rep.criterion is not None:
        out["criterion_integers"] = [str(v) for v in rep.criterion.values()]
        out["factorizations"] = [_factorization_dict(f) for f in rep.factorizations]
        out["unfactored_cofactors"] = [str(u) for u in rep.unfactored_cofactors]
    return out


def _cmd_ekm(args: argparse.Namespace) -> int:
    status = 0
    reports = []
    if not args.scan_only:
        rep = ekm_by_criterion(args.k, args.m, args.bound)
        reports.append(("criterion", rep))
        if rep.unfactored_cofactors:
            status = 1
    if not args.criterion_only:
        reports.append(("scan", ekm_by_scan(args.k, args.m, args.bound)))
    for route, rep in reports:
        _emit(_report_dict(rep, route), args.format)
    if len(reports) == 2:
        within = [list(rep.members_within_bound) for _, rep in reports]
        agree = within[0] == within[1]
        _emit({"routes_agree_within_bound": agree}, args.format)
        if not agree:
            status = 1
    return status


def _cmd_char(args: argparse.Namespace) -> int:
    pm = prime_modulus(args.p)
    p = pm.p
    if args.k is not None:
        ks = [args.k]
    else:
        ks = [k for k in range(2, (p - 1) // 2 + 1) if (p - 1) % k == 0]
    for k in ks:
        c = chi_k(args.d, k, p)
        _emit({"p": p, "k": k, "d": args.d, "raw": c.raw, "kind": c.kind}, args.format)
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    status = 0
    for result in run_selftest():
        out: dict = {"suite": result.name, "checks": result.checks, "ok": result.ok}
        if not result.ok:
            out["failures"] = result.failures[:5]
            status = 1
        _emit(out, args.format)
    return status


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resdet",
        description="Determinants of power-residue matrices over prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--format", choices=("json", "table"), default="json")

    sp = sub.add_parser("det", help="compute one determinant")
    sp.add_argument("--p", type=int, required=True, help="odd prime modulus")
    sp.add_argument("--k", type=int, required=True, help="residue power, k | p-1")
    sp.add_argument("--n", type=int, required=True, help="entry exponent, n >= 0")
    sp.add_argument("--d", type=int, required=True, help="shift parameter, p does not divide d")
    sp.add_argument("--exact", action="store_true", help="also the exact integer determinant")
    sp.add_argument("--pfaffian", action="store_true", help="also the Pfaffian (skew case only)")
    add_format(sp)
    sp.set_defaults(fn=_cmd_det)

    sp = sub.add_parser("verify", help="sweep one identity check over primes")
    sp.add_argument("check", choices=sorted(CHECKS), help="identity to verify")
    sp.add_argument("--pmax", type=int, default=None, help="largest prime (per-check default)")
    sp.add_argument("--klist", type=_intlist, default=None, help="restrict k values, e.g. 2,3")
    sp.add_argument("--mlist", type=_intlist, default=None, help="restrict exponents/shifts")
    sp.add_argument("--dlist", type=_intlist, default=None, help="restrict d values")
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: cores)")
    add_format(sp)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("ekm", help="exceptional prime set for one (k, m)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--m", type=int, required=True, help="odd shift")
    sp.add_argument("--bound", type=int, default=1000, help="prime bound for the scan view")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--criterion-only", action="store_true", help="skip the direct scan")
    group.add_argument("--scan-only", action="store_true", help="skip the criterion route")
    add_format(sp)
    sp.set_defaults(fn=_cmd_ekm)

    sp = sub.add_parser("char", help="character classification of d")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--k", type=int, default=None, help="one k (default: every k | p-1)")
    add_format(sp)
    sp.set_defaults(fn=_cmd_char)

    sp = sub.add_parser("selftest", help="run every property suite")
    add_format(sp)
    sp.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
