"""Batch front-end: generate lattices, run check suites, export artifacts.

Subcommands: generate, check, galois, hochschild, label.  Reports are JSON
with a versioned schema and deterministic ordering; exit code 0 means the
violation list is empty.  Output files land in --outdir or, if unset, in
$BUBBLELATTICE_OUTDIR (default: current directory).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .bubble import (
    DEFAULT_CAP,
    build_bubble_lattice,
    build_shuffle_poset,
    count_shuffle,
)
from .checks import SUITE_NAMES, run_suite
from .errors import BubbleLatticeError, CapExceeded
from .exports import element_table_csv, hasse_dot, sigma_table_csv
from .galois import (
    bubble_galois_explicit,
    galois_graph,
    max_orthogonal_pairs,
    order_irreducibles,
)
from .labeling import build_label_poset, edge_labels, verify_cu_labeling

SCHEMA_VERSION = 1


def _outdir(args) -> Path:
    if args.outdir:
        path = Path(args.outdir)
    else:
        path = Path(os.environ.get("BUBBLELATTICE_OUTDIR", "."))
    path.mkdir(parents=True, exist_ok=True)
    return path


def _resolve_mn(args) -> tuple[int, int]:
    m = args.m_flag if args.m_flag is not None else args.m
    n = args.n_flag if args.n_flag is not None else args.n
    if m is None or n is None:
        raise SystemExit("need alphabet sizes: positional `m n` or --m/--n")
    return m, n


def _guard_cap(m: int, n: int, cap) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    size = count_shuffle(m, n)
    if size > limit:
        raise CapExceeded(f"family ({m},{n}) has {size} elements, above the cap {limit}")


def cmd_generate(args) -> int:
    m, n = _resolve_mn(args)
    _guard_cap(m, n, args.cap)
    outdir = _outdir(args)
    family = build_bubble_lattice(m, n, cap=args.cap)
    wrote = []
    if args.csv or not (args.dot or args.json):
        path = outdir / f"bubble_{m}_{n}.csv"
        path.write_text(element_table_csv(family))
        wrote.append(str(path))
    if args.dot:
        bub = outdir / f"bubble_{m}_{n}.dot"
        bub.write_text(hasse_dot(family, f"bubble_{m}_{n}"))
        shuffle = build_shuffle_poset(m, n, cap=args.cap)
        shuf = outdir / f"shuffle_{m}_{n}.dot"
        shuf.write_text(hasse_dot(shuffle, f"shuffle_{m}_{n}"))
        wrote.extend([str(bub), str(shuf)])
    if args.json:
        path = outdir / f"bubble_{m}_{n}_covers.json"
        path.write_text(family.poset.covers_json() + "\n")
        wrote.append(str(path))
    for path in wrote:
        print(path)
    return 0


def _run_one_suite(payload):
    name, m, n, cap = payload
    started = time.monotonic()
    results = run_suite(name, m, n, cap=cap)
    elapsed = time.monotonic() - started
    return name, [
        {"id": r.id, "status": r.status, "detail": r.detail} for r in results
    ], elapsed


def build_check_report(m, n, suites, cap=None, parallel=False, timings=False) -> dict:
    jobs = [(name, m, n, cap) for name in suites]
    if parallel and len(jobs) > 1:
        try:
            with ProcessPoolExecutor() as pool:
                outcomes = list(pool.map(_run_one_suite, jobs))
        except (OSError, RuntimeError):
            outcomes = [_run_one_suite(job) for job in jobs]
    else:
        outcomes = [_run_one_suite(job) for job in jobs]
    checks = []
    timing = {}
    for name, results, elapsed in outcomes:
        checks.extend(results)
        timing[name] = round(elapsed, 3)
    report = {
        "schema": SCHEMA_VERSION,
        "m": m,
        "n": n,
        "suites": list(suites),
        "checks": checks,
        "violations": [c["id"] for c in checks if c["status"] == "fail"],
    }
    if timings:
        report["timings"] = timing
    return report


def cmd_check(args) -> int:
    m, n = _resolve_mn(args)
    _guard_cap(m, n, args.cap)
    if args.suite in (None, "all"):
        suites = list(SUITE_NAMES)
    else:
        suites = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [s for s in suites if s not in SUITE_NAMES]
        if unknown:
            raise SystemExit(f"unknown suites: {unknown}; choose from {SUITE_NAMES}")
    report = build_check_report(
        m, n, suites, cap=args.cap, parallel=args.parallel, timings=args.timings
    )
    text = json.dumps(report, sort_keys=True, indent=2)
    print(text)
    if args.json:
        path = _outdir(args) / f"check_{m}_{n}.json"
        path.write_text(text + "\n")
    return 0 if not report["violations"] else 1


def cmd_galois(args) -> int:
    m, n = _resolve_mn(args)
    _guard_cap(m, n, args.cap)
    outdir = _outdir(args)
    family = build_bubble_lattice(m, n, cap=args.cap)
    ordering = order_irreducibles(family.poset)
    generic = galois_graph(family.poset, ordering)
    explicit = bubble_galois_explicit(m, n)
    wrote = []
    if args.dot:
        path = outdir / f"galois_{m}_{n}.dot"
        path.write_text(explicit.to_dot(f"galois_{m}_{n}"))
        wrote.append(str(path))
    if args.json:
        path = outdir / f"galois_{m}_{n}.json"
        path.write_text(explicit.adjacency_json() + "\n")
        wrote.append(str(path))
    mop = max_orthogonal_pairs(generic)
    summary = {
        "schema": SCHEMA_VERSION,
        "m": m,
        "n": n,
        "k": ordering.k,
        "arcs": len(explicit.arcs),
        "orthogonal_pairs": len(mop.pairs),
        "elements": len(family.words),
    }
    print(json.dumps(summary, sort_keys=True, indent=2))
    for path in wrote:
        print(path, file=sys.stderr)
    return 0


def cmd_hochschild(args) -> int:
    n = args.n
    if n is None:
        raise SystemExit("need the tuple length n")
    _guard_cap(n - 1, 1, args.cap)
    from .checks import check_hochschild

    result = check_hochschild(n)
    outdir = _outdir(args)
    if args.csv:
        path = outdir / f"triwords_{n}.csv"
        path.write_text(sigma_table_csv(n))
        print(path, file=sys.stderr)
    report = {
        "schema": SCHEMA_VERSION,
        "n": n,
        "checks": [{"id": result.id, "status": result.status, "detail": result.detail}],
        "violations": [] if result.ok else [result.id],
    }
    print(json.dumps(report, sort_keys=True, indent=2))
    return 0 if result.ok else 1


def cmd_label(args) -> int:
    m, n = _resolve_mn(args)
    _guard_cap(m, n, args.cap)
    outdir = _outdir(args)
    family = build_bubble_lattice(m, n, cap=args.cap)
    labels = edge_labels(family)
    S = build_label_poset(m, n)
    report = verify_cu_labeling(family.poset, labels, S.leq)
    wrote = []
    if args.dot:
        path = outdir / f"bubble_{m}_{n}_labeled.dot"
        path.write_text(hasse_dot(family, f"bubble_{m}_{n}", labeled=True))
        wrote.append(str(path))
    if args.json:
        path = outdir / f"cu_report_{m}_{n}.json"
        path.write_text(report.to_json() + "\n")
        wrote.append(str(path))
    print(report.to_json())
    for path in wrote:
        print(path, file=sys.stderr)
    return 0 if report.ok else 1


def _add_common(parser, with_n=True) -> None:
    parser.add_argument("m", type=int, nargs="?", help="size of the x-alphabet")
    if with_n:
        parser.add_argument("n", type=int, nargs="?", help="size of the y-alphabet")
    parser.add_argument("--m", dest="m_flag", type=int, help="alternative to positional m")
    parser.add_argument("--n", dest="n_flag", type=int, help="alternative to positional n")
    parser.add_argument("--cap", type=int, default=None, help="max element count (default 50000)")
    parser.add_argument("--outdir", default=None, help="output directory (or $BUBBLELATTICE_OUTDIR)")
    parser.add_argument("--dot", action="store_true", help="write DOT files")
    parser.add_argument("--csv", action="store_true", help="write CSV files")
    parser.add_argument("--json", action="store_true", help="write JSON files")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="bubblelattice",
        description="Build and verify bubble lattices and shuffle posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="element table and Hasse diagrams")
    _add_common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="run verification suites")
    _add_common(p)
    p.add_argument("--suite", default="all", help=f"comma-separated subset of {SUITE_NAMES}")
    p.add_argument("--parallel", action="store_true", help="fan suites out across processes")
    p.add_argument("--timings", action="store_true", help="include per-suite timings in the report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("galois", help="Galois graphs and their reconstruction")
    _add_common(p)
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("hochschild", help="triword encoding of single-y lattices")
    p.add_argument("n", type=int, nargs="?", help="tuple length")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--outdir", default=None)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_hochschild)

    p = sub.add_parser("label", help="labeled diagram and CU report")
    _add_common(p)
    p.set_defaults(func=cmd_label)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except BubbleLatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
