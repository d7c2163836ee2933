"""Command line front end.

Exit codes: 0 success, 1 verdict or regression failure, 2 input error,
3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from .arrangements import parse_tuple, screen
from .curvefile import load_curve, load_points
from .errors import CurveError, InputError, InternalInconsistency
from .report import analyze

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
WORKERS_ENV = "PLANE_CURVES_WORKERS"

log = logging.getLogger("plane_curves")


def corpus_dir() -> Path:
    return Path(str(resources.files("plane_curves") / "corpus"))


def _mode(args) -> str:
    if args.exact:
        return "exact"
    if getattr(args, "modular", False):
        return "modular"
    return "auto"


def cmd_analyze(args) -> int:
    cf = load_curve(args.file)
    extra = load_points(args.points, cf.field) if args.points else []
    rep = analyze(cf, mode=_mode(args), extra_points=extra)
    if args.json:
        print(rep.to_json(indent=2))
    else:
        print(rep.summary())
    if not rep.complete:
        print(f"incomplete singular data: sum tau_p = {rep.sum_local_tau} < "
              f"tau(C) = {rep.invariants.tau}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK if rep.expectations_ok else EXIT_FAIL


def read_tuples(path) -> list:
    out = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_tuple(line))
    return out


def cmd_screen(args) -> int:
    if args.tuple:
        wcs = [parse_tuple(t) for t in args.tuple]
    elif args.file:
        wcs = read_tuples(args.file)
    else:
        raise InputError("give a tuple file or --tuple")
    rows = [screen(wc) for wc in wcs]
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            cm = r["cm_check"] if isinstance(r["cm_check"], str) else "n/a"
            verdict = "candidate" if r["candidate"] else "-"
            extra = ""
            if "target_tau" in r:
                extra = f" target tau={r['target_tau']} exponents={tuple(r['target_exponents'])}"
            print(f"{' '.join(map(str, r['tuple'])):<20} naive={r['naive_count']!s:<5} "
                  f"cm={cm:<6} tau={r['tau']:<5}{extra}  {verdict}")
    return EXIT_OK


def _run_entry(path: str, mode: str):
    """One corpus entry; returns (name, ok, detail, report dict or None)."""
    try:
        rep = analyze(load_curve(path), mode=mode)
    except InternalInconsistency as exc:
        return Path(path).stem, False, f"internal: {exc}", None, EXIT_INTERNAL
    except CurveError as exc:
        return Path(path).stem, False, f"error: {exc}", None, EXIT_INPUT
    bad = {k: v for k, v in rep.expectations.items() if not v["ok"]}
    ok = not bad and rep.complete
    detail = "; ".join(f"{k}: expected {v['expected']} got {v['actual']}" for k, v in bad.items())
    if not rep.complete:
        detail = (detail + "; " if detail else "") + "incomplete singular data"
    summary = ", ".join(f"{k}={v['actual']}" for k, v in rep.expectations.items()
                        if k in ("tau", "mdr", "free", "maximizing", "m_curve"))
    return rep.name, ok, detail or summary, rep.to_dict(), EXIT_OK if ok else EXIT_FAIL


def cmd_corpus(args) -> int:
    root = Path(args.corpus_dir) if args.corpus_dir else corpus_dir()
    files = sorted(root.glob("*.curve"))
    if args.filter:
        files = [f for f in files if args.filter.lower() in f.stem.lower()]
    mode = _mode(args)
    workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_entry, map(str, files), [mode] * len(files)))
    else:
        results = [_run_entry(str(f), mode) for f in files]

    screening = []
    tuples_file = root / "screening.txt"
    if tuples_file.exists() and (not args.filter or args.filter.lower() in "screening"):
        for wc in read_tuples(tuples_file):
            row = screen(wc)
            ok = row["candidate"] and row.get("tau_matches_target", False)
            screening.append((str(wc), ok, row))

    code = max([r[4] for r in results] + [EXIT_OK if ok else EXIT_FAIL for _, ok, _ in screening],
               default=EXIT_OK)
    if args.json:
        print(json.dumps({
            "entries": [{"name": n, "ok": ok, "detail": d, "report": rep}
                        for n, ok, d, rep, _ in results],
            "screening": [{"tuple": t, "ok": ok, "row": row} for t, ok, row in screening],
            "ok": code == EXIT_OK,
        }, indent=2))
    else:
        for n, ok, d, _, _ in results:
            print(f"{'PASS' if ok else 'FAIL'}  {n:<24} {d}")
        for t, ok, row in screening:
            print(f"{'PASS' if ok else 'FAIL'}  screen {t:<17} cm={row['cm_check']} tau={row['tau']}")
        total = len(results) + len(screening)
        passed = sum(r[1] for r in results) + sum(ok for _, ok, _ in screening)
        print(f"{passed}/{total} passed")
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plane-curves",
                                description="Invariants and verdicts for reduced plane curves.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one curve file")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.add_argument("--exact", action="store_true", help="exact rank everywhere")
    a.add_argument("--modular", action="store_true", help="modular rank everywhere")
    a.add_argument("--points", help="file with additional point: lines")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("screen", help="combinatorial screening of line arrangements")
    s.add_argument("file", nargs="?")
    s.add_argument("--tuple", action="append", help='"d t2 t3 t4 ..."; repeatable')
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_screen)

    c = sub.add_parser("corpus", help="run the built-in regression corpus")
    c.add_argument("--filter")
    c.add_argument("--json", action="store_true")
    c.add_argument("--exact", action="store_true")
    c.add_argument("--corpus-dir", help="use another corpus directory")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (CurveError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
