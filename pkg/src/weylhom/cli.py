"""Command-line front end.

Subcommands: homdim, straighten, tableaux, check, search.  Machine-readable
JSON goes to stdout; exit codes are 0 (ok), 1 (verification failed), 2 (bad
input), 3 (I/O error).  WEYLHOM_THREADS overrides the search worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import carterpayne, homspace, report
from .modarith import require_prime
from .tableaux import (
    check_partition,
    normalize_shape,
    partitions_of,
    render_row,
    render_tableau,
    standard_tableaux,
)
from .weyl2 import straighten


def _parse_parts(text: str) -> tuple:
    try:
        return check_partition(int(x) for x in text.split(","))
    except Exception as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from exc


def _parse_vector(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except Exception as exc:
        raise ValueError(f"bad integer vector {text!r}") from exc


def _conditions_json(lam, mu, p):
    mu = normalize_shape(mu)
    if len(lam) < 2 or not mu[1] <= lam[0] <= mu[0]:
        return None
    conds = homspace.sum_hom_conditions(lam, mu, p)
    return [{"label": c.label, "x": c.x, "y": c.y, "holds": c.holds} for c in conds]


def _partition_list(parts) -> list:
    return [int(x) for x in parts if x]


def cmd_homdim(args) -> int:
    lam = _parse_parts(args.lam)
    mu = _parse_parts(args.mu)
    if len(mu) > 2:
        raise ValueError("the target shape must have at most two parts")
    require_prime(args.p)
    result = homspace.hom_space(lam, mu, args.p)
    payload = {
        "lambda": _partition_list(lam),
        "mu": _partition_list(result.mu),
        "p": args.p,
        "dim": result.dimension,
        "tableau_count": len(result.tableaux),
        "conditions": {"thm31": _conditions_json(lam, mu, args.p)},
        "basis": result.basis if args.basis else None,
    }
    if result.reason:
        payload["reason"] = result.reason
    print(json.dumps(payload, indent=2 if args.json else None))
    return 0


def cmd_straighten(args) -> int:
    mu = normalize_shape(_parse_parts(args.mu))
    require_prime(args.p)
    row_a = _parse_vector(args.row_a)
    row_b = _parse_vector(args.row_b)
    n = max(len(row_a), len(row_b))
    row_a += (0,) * (n - len(row_a))
    row_b += (0,) * (n - len(row_b))
    expansion = straighten(mu, row_a, row_b, args.p)
    terms = sorted(expansion.items(), key=lambda kv: kv[0].row_b)
    if not args.json:
        print(f"[{render_row(row_a)} / {render_row(row_b)}]  (mod {args.p})")
        if not terms:
            print("  = 0")
        for k, (tab, coeff) in enumerate(terms):
            lead = "  =" if k == 0 else "  +"
            print(f"{lead} {coeff} * {render_tableau(tab)}")
    print(json.dumps({
        "mu": list(mu), "p": args.p,
        "row_a": list(row_a), "row_b": list(row_b),
        "terms": [{"coeff": int(c), "row_a": list(t.row_a), "row_b": list(t.row_b),
                   "text": render_tableau(t)} for t, c in terms],
    }))
    return 0


def cmd_tableaux(args) -> int:
    mu = _parse_parts(args.mu)
    weight = _parse_vector(args.weight)
    tabs = standard_tableaux(mu, weight)
    if not args.json:
        for tab in tabs:
            print(render_tableau(tab))
        print(f"count: {len(tabs)}")
    else:
        print(json.dumps({
            "mu": _partition_list(normalize_shape(mu)),
            "weight": list(weight),
            "count": len(tabs),
            "tableaux": [{"row_a": list(t.row_a), "row_b": list(t.row_b),
                          "text": render_tableau(t)} for t in tabs],
        }))
    return 0


def _condition_dict(c) -> dict:
    return {"label": c.label, "x": c.x, "y": c.y, "holds": c.holds}


def cmd_check(args) -> int:
    require_prime(args.p)
    if args.mode == "thm31":
        lam = _parse_parts(args.lam)
        mu = _parse_parts(args.mu)
        rep = homspace.verify_sum_hom(lam, mu, args.p)
        verdict = "pass" if rep.passed else ("conditions-failed" if not rep.all_hold else "fail")
        print(json.dumps({
            "mode": "thm31", "lambda": list(lam), "mu": _partition_list(rep.mu),
            "p": args.p,
            "conditions": [_condition_dict(c) for c in rep.conditions],
            "all_hold": rep.all_hold, "in_nullspace": rep.in_nullspace,
            "generator_image_nonzero": rep.generator_image_nonzero,
            "tableau_count": rep.tableau_count, "verdict": verdict,
        }))
        return 0 if rep.passed else 1
    if args.mode == "cor62":
        lam = _parse_parts(args.lam)
        mu = _parse_parts(args.mu)
        rep = carterpayne.verify_dim2(lam, mu, args.p)
        verdict = "pass" if rep.passed else ("conditions-failed" if not rep.conditions.all_hold else "fail")
        print(json.dumps(_dim2_json(rep, verdict)))
        return 0 if rep.passed else 1
    # mode example64
    a, lam, mu = carterpayne.dim2_family(args.p)
    rep = carterpayne.verify_dim2(lam, mu, args.p)
    verdict = "pass" if rep.passed else "fail"
    payload = _dim2_json(rep, verdict)
    payload["mode"] = "example64"
    payload["a"] = a
    print(json.dumps(payload))
    return 0 if rep.passed else 1


def _dim2_json(rep, verdict) -> dict:
    return {
        "mode": "cor62", "lambda": list(rep.lam), "mu": list(rep.mu),
        "p": rep.p, "d": rep.d,
        "conditions": [_condition_dict(c) for c in rep.conditions.as_list()],
        "all_hold": rep.conditions.all_hold,
        "tableau_count": rep.tableau_count,
        "psi1_in_nullspace": rep.psi1_in_nullspace,
        "psi2_in_nullspace": rep.psi2_in_nullspace,
        "pair_rank": rep.pair_rank,
        "dim": rep.dimension,
        "verdict": verdict,
    }


@dataclass
class SearchConfig:
    ps: tuple
    r_min: int
    r_max: int
    m_max: int
    require_mu2_le_lam1: bool
    require_conditions: bool
    min_dim: int
    lam_pin: tuple | None
    out: str
    workers: int
    plot: bool


def _conditions_applicable(lam, mu) -> bool:
    return len(lam) >= 2 and mu[1] <= lam[0] <= mu[0]


def _search_items(config: SearchConfig):
    items = []
    for p in config.ps:
        if config.lam_pin is not None:
            degrees = [sum(config.lam_pin)]
        else:
            degrees = range(config.r_min, config.r_max + 1)
        for r in degrees:
            lams = [config.lam_pin] if config.lam_pin is not None \
                else partitions_of(r, max_parts=config.m_max)
            for lam in lams:
                for mu1 in range((r + 1) // 2, r + 1):
                    mu = (mu1, r - mu1)
                    if config.require_mu2_le_lam1 and not mu[1] <= lam[0] <= mu[0]:
                        continue
                    if config.require_conditions:
                        if not _conditions_applicable(lam, mu):
                            continue
                        conds = homspace.sum_hom_conditions(lam, mu, p)
                        if not all(c.holds for c in conds):
                            continue
                    items.append((p, lam, mu))
    return items


def _search_worker(item):
    p, lam, mu = item
    start = time.perf_counter()
    result = homspace.hom_space(lam, mu, p)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    conds = _conditions_json(lam, mu, p)
    return {
        "p": p,
        "r": sum(lam),
        "lambda": _partition_list(lam),
        "mu": _partition_list(result.mu),
        "tableau_count": len(result.tableaux),
        "conditions": conds,
        "dim": result.dimension,
        "elapsed_ms": elapsed_ms,
    }


def run_search(config: SearchConfig) -> list:
    items = _search_items(config)
    if config.workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            chunk = max(1, len(items) // (config.workers * 8))
            records = list(pool.map(_search_worker, items, chunksize=chunk))
    else:
        records = [_search_worker(item) for item in items]
    records = [rec for rec in records if rec["dim"] >= config.min_dim]
    records.sort(key=lambda rec: (rec["p"], rec["r"], rec["lambda"], rec["mu"]))
    return records


def cmd_search(args) -> int:
    ps = tuple(sorted({int(x) for x in args.p.split(",")}))
    for p in ps:
        require_prime(p)
    lam_pin = _parse_parts(args.lam) if args.lam else None
    workers = int(os.environ.get("WEYLHOM_THREADS", args.workers))
    config = SearchConfig(
        ps=ps, r_min=max(1, args.rmin), r_max=args.rmax, m_max=args.mmax,
        require_mu2_le_lam1=args.require_mu2_le_lambda1,
        require_conditions=args.require_thm31,
        min_dim=args.min_dim, lam_pin=lam_pin,
        out=args.out, workers=max(1, workers), plot=not args.no_plot,
    )
    records = run_search(config)
    base, _ = os.path.splitext(config.out)
    try:
        report.write_jsonl(records, config.out)
        report.write_csv(records, base + ".csv")
        if config.plot:
            report.render_figure(records, base + ".png")
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 3
    print(json.dumps({"records": len(records), "out": config.out}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylhom",
        description="Hom spaces between Weyl modules with two-row targets, over GF(p).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("homdim", help="dimension and basis of one hom space")
    q.add_argument("--p", type=int, required=True, help="prime characteristic")
    q.add_argument("--lambda", dest="lam", required=True, help="source partition, e.g. 2,2,2")
    q.add_argument("--mu", required=True, help="target partition with at most two parts")
    q.add_argument("--basis", action="store_true", help="include the nullspace basis")
    q.add_argument("--json", action="store_true", help="pretty-print the JSON")
    q.set_defaults(func=cmd_homdim)

    s = sub.add_parser("straighten", help="standard-basis expansion of a bideterminant")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--mu", required=True)
    s.add_argument("--row-a", dest="row_a", required=True, help="top-row exponents, e.g. 1,1")
    s.add_argument("--row-b", dest="row_b", required=True, help="bottom-row exponents")
    s.add_argument("--json", action="store_true", help="JSON only")
    s.set_defaults(func=cmd_straighten)

    t = sub.add_parser("tableaux", help="standard tableaux of a shape and weight")
    t.add_argument("--mu", required=True)
    t.add_argument("--weight", required=True)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tableaux)

    c = sub.add_parser("check", help="verify a named construction")
    c.add_argument("--mode", choices=["thm31", "cor62", "example64"], required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--lambda", dest="lam", help="source partition")
    c.add_argument("--mu", help="target partition")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("search", help="grid search for nonzero hom spaces")
    g.add_argument("--p", required=True, help="comma-separated primes, e.g. 2,3")
    g.add_argument("--rmin", type=int, default=2)
    g.add_argument("--rmax", type=int, default=14)
    g.add_argument("--mmax", type=int, default=6, help="max number of parts of lambda")
    g.add_argument("--lambda", dest="lam", default=None, help="pin the source partition")
    g.add_argument("--require-thm31", action="store_true",
                   help="only pairs whose divisibility conditions all hold")
    g.add_argument("--require-mu2-le-lambda1", action="store_true",
                   help="only pairs with mu2 <= lambda1")
    g.add_argument("--min-dim", type=int, default=1)
    g.add_argument("--out", required=True, help="JSON-lines output path")
    g.add_argument("--workers", type=int, default=1)
    g.add_argument("--no-plot", action="store_true")
    g.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        if args.mode in ("thm31", "cor62") and not (args.lam and args.mu):
            parser.error(f"--mode {args.mode} requires --lambda and --mu")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
