"""Command-line entry point: ``binomcong {list,verify,identities,conjecture,wss-scan}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .errors import CongruenceError


def _add_grid_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--pmin", type=int, default=2)
    sp.add_argument("--pmax", type=int, default=50)
    sp.add_argument("--amax", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="include wall time in the report")
    sp.add_argument("--out", help="write the report here instead of stdout")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="binomcong", description="Verify congruences for sums of central binomial coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="show every registered congruence")

    v = sub.add_parser("verify", help="evaluate registered congruences over a parameter grid")
    v.add_argument("--id", action="append", dest="ids", help="registry id (repeatable; default all)")
    _add_grid_flags(v)
    v.add_argument("--pamax", type=int, default=2500, help="skip prime powers above this bound")
    v.add_argument("--dmode", choices=["all", "sample", "fixed"], default="all")
    v.add_argument("--d", action="append", type=int, dest="dvalues", default=[], help="d value for --dmode fixed")
    v.add_argument("--samples", type=int, default=8, help="random d values per (p, a) in sample mode")
    v.add_argument("--m", action="append", type=int, dest="mset", help="m value (repeatable)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--only-failures", action="store_true", help="list only non-passing instances")

    i = sub.add_parser("identities", help="exact polynomial and rational identities")
    i.add_argument("--nmax", type=int, default=12)
    i.add_argument("--dmax", type=int, default=15)
    i.add_argument("--staver-max", type=int, default=50)
    i.add_argument("--timing", action="store_true")
    i.add_argument("--out")
    i.add_argument("--format", choices=["json", "text"], default="text")

    c = sub.add_parser("conjecture", help="residuals of the open mod p^3 conjecture")
    c.add_argument("--pmin", type=int, default=3)
    c.add_argument("--pmax", type=int, default=200)
    c.add_argument("--amax", type=int, default=1)
    c.add_argument("--timing", action="store_true")
    c.add_argument("--out")
    c.add_argument("--format", choices=["json", "text"], default="text")

    w = sub.add_parser("wss-scan", help="search for Fibonacci-Wieferich primes (p^2 dividing F_{p-(p/5)})")
    w.add_argument("--pmax", type=int, default=1000)
    w.add_argument("--out")
    w.add_argument("--format", choices=["json", "text"], default="text")
    return parser


def _conjecture_text(report: dict) -> str:
    lines = [f"{'p':>6} {'a':>2} {'lhs':>12} {'rhs':>12} {'residual':>10} verdict"]
    for r in report["results"]:
        lhs, rhs, res = (str(r[k]) for k in ("lhs", "rhs", "residual"))
        lines.append(f"{r['p']:>6} {r['a']:>2} {lhs:>12} {rhs:>12} {res:>10} {r['verdict']}")
    for s in report["skipped"]:
        lines.append(f"skipped p={s['p']}: {s['note']}")
    s = report["summary"]
    lines.append(f"holds for {s['holds']} of {s['instances']} instances")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if getattr(args, "pmin", 2) < 2:
        parser.error("--pmin must be at least 2")
    if getattr(args, "amax", 1) < 1:
        parser.error("--amax must be at least 1")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    for name in ("nmax", "staver_max"):
        if getattr(args, name, 1) < 1:
            parser.error(f"--{name.replace('_', '-')} must be positive")
    if getattr(args, "dmax", 0) < 0:
        parser.error("--dmax must be non-negative")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        if args.command == "list":
            _emit(harness.list_table(), None)
            return 0
        if args.command == "verify":
            config = harness.RunConfig(
                pmin=args.pmin, pmax=args.pmax, amax=args.amax, pamax=args.pamax,
                dmode=args.dmode, dvalues=args.dvalues, samples=args.samples,
                mset=args.mset, seed=args.seed, jobs=args.jobs, only_failures=args.only_failures,
            )
            if args.ids:
                config.ids = list(dict.fromkeys(args.ids))
            report, code = harness.verify_report(config, timing=args.timing)
            render = {"json": harness.to_json, "csv": harness.to_csv, "text": harness.to_text}[args.format]
            _emit(render(report), args.out)
            return code
        if args.command == "identities":
            report, code = harness.identities_report(args.nmax, args.dmax, args.staver_max, args.timing)
            _emit(harness.to_json(report) if args.format == "json" else harness.to_text(report), args.out)
            return code
        if args.command == "conjecture":
            report = harness.conjecture_report(args.pmin, args.pmax, args.amax, args.timing)
            _emit(harness.to_json(report) if args.format == "json" else _conjecture_text(report), args.out)
            return 0
        if args.command == "wss-scan":
            hits = harness.wss_scan(args.pmax)
            if args.format == "json":
                text = json.dumps({"pmax": args.pmax, "primes": hits}) + "\n"
            else:
                text = (" ".join(map(str, hits)) if hits else "no Fibonacci-Wieferich primes found") + "\n"
            _emit(text, args.out)
            return 0
    except (CongruenceError, OSError) as exc:
        print(f"binomcong: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
