"""Batch evaluation and report building for the command-line front end.

Everything here returns plain dicts/strings; the CLI owns all I/O.  Reports
are sorted before serialization so the worker count never changes the bytes.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import groupby

from . import __version__
from .catalog import REGISTRY, CheckResult, Limits, Params, evaluate, get_spec, instances
from .errors import DomainViolation
from .identities import check_cor21, check_lemma41, check_staver, check_thm21_u, check_thm21_v
from .modarith import jacobi, primes_in
from .sequences import named_sequence

CSV_HEADER = ["id", "p", "a", "d", "m", "A", "B", "modulus", "lhs", "rhs", "verdict"]


@dataclass
class RunConfig:
    ids: list[str] = field(default_factory=lambda: list(REGISTRY))
    pmin: int = 2
    pmax: int = 50
    amax: int = 1
    pamax: int | None = 2500
    dmode: str = "all"
    dvalues: list[int] = field(default_factory=list)
    samples: int = 8
    mset: list[int] | None = None
    seed: int = 0
    jobs: int = 1
    only_failures: bool = False

    def limits(self) -> Limits:
        kw = dict(
            pmin=self.pmin, pmax=self.pmax, amax=self.amax, pamax=self.pamax,
            dmode=self.dmode, dvalues=tuple(self.dvalues), samples=self.samples, seed=self.seed,
        )
        if self.mset:
            kw["mset"] = tuple(self.mset)
        return Limits(**kw)

    def echo(self) -> dict:
        """The parts of the config that determine the report body (not ``jobs``)."""
        out = asdict(self)
        out.pop("jobs")
        out["mset"] = list(self.limits().mset)
        return out


def _run_chunk(job: tuple[str, list[Params]]) -> list[CheckResult]:
    id, params = job
    return [evaluate(id, P) for P in params]


def _chunks(config: RunConfig) -> list[tuple[str, list[Params]]]:
    # one chunk per (id, p, a) keeps per-prime tables warm inside a worker
    limits = config.limits()
    out = []
    for id in config.ids:
        for _, group in groupby(instances(id, limits), key=lambda P: (P.p, P.a)):
            out.append((id, list(group)))
    return out


def run_checks(config: RunConfig) -> list[CheckResult]:
    for id in config.ids:
        get_spec(id)
    jobs = _chunks(config)
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            batches = list(pool.map(_run_chunk, jobs, chunksize=max(1, len(jobs) // (8 * config.jobs))))
    else:
        batches = [_run_chunk(j) for j in jobs]
    order = {id: i for i, id in enumerate(REGISTRY)}
    results = [r for batch in batches for r in batch]
    results.sort(key=lambda r: (order[r.id], r.params.sort_key()))
    return results


def summarize(results: list[CheckResult]) -> dict:
    summary: dict[str, dict] = {}
    for r in results:
        s = summary.setdefault(r.id, {"instances": 0, "passes": 0, "failures": 0, "errors": 0,
                                      "conjecture": r.conjecture})
        s["instances"] += 1
        if r.passed:
            s["passes"] += 1
        elif "error" in r.verdict:
            s["errors"] += 1
        else:
            s["failures"] += 1
    return summary


def _row(r: CheckResult) -> dict:
    return {
        "id": r.id,
        "params": r.params.as_dict(),
        "modulus": str(r.modulus),
        "lhs": None if r.lhs is None else str(r.lhs),
        "rhs": None if r.rhs is None else str(r.rhs),
        "verdict": r.verdict,
    }


def verify_report(config: RunConfig, timing: bool = False) -> tuple[dict, int]:
    """Run the configured checks; return the report and the process exit code."""
    t0 = time.perf_counter()
    results = run_checks(config)
    summary = summarize(results)
    shown = [r for r in results if not r.passed] if config.only_failures else results
    report = {
        "version": __version__,
        "config": config.echo(),
        "results": [_row(r) for r in shown],
        "summary": summary,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000) if timing else None,
    }
    code = 1 if any(r.counts_as_failure for r in results) else 0
    return report, code


def identities_report(nmax: int, dmax: int, staver_max: int = 50, timing: bool = False) -> tuple[dict, int]:
    t0 = time.perf_counter()
    checks = []
    for n in range(1, nmax + 1):
        for d in range(-dmax, dmax + 1):
            checks.append(check_thm21_u(n, d))
            checks.append(check_thm21_v(n, d))
        for d in range(0, dmax + 1):
            for which in ("2.3", "2.4", "2.5"):
                checks.append(check_cor21(which, n, d))
        checks.append(check_lemma41(n))
    for n in range(1, staver_max + 1):
        checks.append(check_staver(n))
    rows = []
    summary: dict[str, dict] = {}
    for c in checks:
        s = summary.setdefault(c.name, {"instances": 0, "passes": 0, "failures": 0, "errors": 0})
        s["instances"] += 1
        s["passes" if c.equal else "failures"] += 1
        row = {"id": c.name, "params": c.params, "verdict": "pass" if c.equal else "fail"}
        if not c.equal:
            row["lhs"], row["rhs"] = str(c.lhs), str(c.rhs)
        rows.append(row)
    report = {
        "version": __version__,
        "config": {"nmax": nmax, "dmax": dmax, "staver_max": staver_max},
        "results": rows,
        "summary": summary,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000) if timing else None,
    }
    return report, 0 if all(c.equal for c in checks) else 1


def conjecture_report(pmin: int, pmax: int, amax: int, timing: bool = False) -> dict:
    """Residual ``lhs - rhs mod p^3`` of the open conjecture per ``(p, a)``."""
    t0 = time.perf_counter()
    rows, skipped = [], []
    for p in primes_in(pmin, pmax):
        if p in (2, 5):
            skipped.append({"p": p, "note": "outside the domain p != 2, 5"})
            continue
        for a in range(1, amax + 1):
            try:
                r = evaluate("C1.1", Params(p, a))
            except DomainViolation as exc:
                skipped.append({"p": p, "a": a, "note": str(exc)})
                break
            residual = None if r.lhs is None else (r.lhs - r.rhs) % r.modulus
            rows.append({
                "p": p, "a": a, "modulus": str(r.modulus),
                "lhs": None if r.lhs is None else str(r.lhs),
                "rhs": None if r.rhs is None else str(r.rhs),
                "residual": None if residual is None else str(residual),
                "verdict": r.verdict,
            })
    return {
        "version": __version__,
        "config": {"pmin": pmin, "pmax": pmax, "amax": amax},
        "results": rows,
        "skipped": skipped,
        "summary": {
            "instances": len(rows),
            "holds": sum(1 for r in rows if r["residual"] == "0"),
            "counterexamples": [(r["p"], r["a"]) for r in rows if r["residual"] != "0"],
        },
        "elapsed_ms": round((time.perf_counter() - t0) * 1000) if timing else None,
    }


def wss_scan(pmax: int) -> list[int]:
    """Primes ``p != 2, 5`` up to ``pmax`` with ``p^2 | F_{p-(p/5)}``."""
    hits = []
    for p in primes_in(2, pmax):
        if p in (2, 5):
            continue
        if named_sequence("F", p - jacobi(p, 5), p * p) == 0:
            hits.append(p)
    return hits


# --- serialization ------------------------------------------------------------


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report["results"]:
        P = row["params"]
        writer.writerow([
            row["id"], *("" if P.get(k) is None else P[k] for k in ("p", "a", "d", "m", "A", "B")),
            row.get("modulus", ""), row.get("lhs") or "", row.get("rhs") or "", row["verdict"],
        ])
    return buf.getvalue()


def to_text(report: dict) -> str:
    lines = [f"binomcong {report['version']}"]
    lines.append(f"{'id':8} {'instances':>10} {'passes':>10} {'failures':>9} {'errors':>7}")
    for id, s in report["summary"].items():
        tag = "  (conjecture)" if s.get("conjecture") else ""
        lines.append(f"{id:8} {s['instances']:>10} {s['passes']:>10} {s['failures']:>9} {s['errors']:>7}{tag}")
    bad = [r for r in report["results"] if r["verdict"] != "pass"]
    if bad:
        lines.append("")
        lines.append("non-passing instances:")
        for r in bad:
            params = ", ".join(f"{k}={v}" for k, v in r["params"].items() if v is not None)
            lines.append(f"  {r['id']} [{params}] lhs={r.get('lhs')} rhs={r.get('rhs')} {r['verdict']}")
    if report.get("elapsed_ms") is not None:
        lines.append(f"elapsed: {report['elapsed_ms']} ms")
    return "\n".join(lines) + "\n"


def list_table() -> str:
    lines = [f"{'id':7} {'modulus':7} {'domain':56} description"]
    for id, spec in REGISTRY.items():
        desc = spec.description + ("  CONJECTURE" if spec.conjecture else "")
        lines.append(f"{id:7} {spec.modulus_label:7} {spec.domain_text:56} {desc}")
    return "\n".join(lines) + "\n"
