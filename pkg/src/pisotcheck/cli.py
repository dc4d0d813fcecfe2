"""Command line: enumerate, check, table1, kenyon, example."""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from .algebra import char_poly, factor_integer_polynomial
from .check import (
    METHODS,
    CheckerDisagreement,
    CheckJob,
    default_workers,
    read_log,
    run_jobs,
    summarize,
)
from .enumeration import TRACES, enumerate_records, sample_records, table1, table1_totals
from .examples import EXAMPLES, FOUR_IET_CASE_SWAP, FOUR_IET_COMPONENT, FOUR_IET_COMPONENT_LETTERS
from .kenyon import kenyon_report
from .spectra.overlap import Caps
from .spectra.suspension import suspension
from .spectra.verdict import extract_noncoincident_component, overlap_check
from .substitution import Substitution, automorphisms, incidence_matrix, letter_isomorphisms

EXIT_OK = 0
EXIT_FAILED = 1  # Inconclusive, disallowed NotPureDiscrete, or a table mismatch
EXIT_USAGE = 2
EXIT_DISAGREE = 3


def _open_out(path: str | None):
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _emit(fh, obj) -> None:
    fh.write(json.dumps(obj, separators=(",", ":")) + "\n")
    fh.flush()


# -- enumerate ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.sample is not None and args.sample < 1:
        raise SystemExit("enumerate: --sample must be positive")
    recs = (
        rec
        for rec in enumerate_records(args.trace)
        if (args.q is None or rec.matrix_class.q == args.q) and (args.r is None or rec.matrix_class.r == args.r)
    )
    if args.sample is not None:
        recs = sample_records(list(recs), args.sample, args.seed)
    out = _open_out(args.output)
    try:
        for rec in recs:
            out.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


# -- check -------------------------------------------------------------------


def _read_records(path: str) -> list[dict]:
    fh = sys.stdin if path == "-" else open(path, encoding="utf-8")
    try:
        rows = [json.loads(line) for line in fh if line.strip()]
    finally:
        if fh is not sys.stdin:
            fh.close()
    for row in rows:
        if "words" not in row or "id" not in row:
            raise ValueError("each input line needs 'id' and 'words'")
    return rows


def cmd_check(args) -> int:
    try:
        rows = _read_records(args.input)
    except (OSError, ValueError) as exc:
        print(f"check: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    caps = Caps(args.max_nodes, args.max_pair_length, args.max_pairs)
    log = Path(args.output) if args.output not in (None, "-") else None
    done: dict = {}
    if log is not None and args.resume:
        done = {r["id"]: r for r in read_log(log)}
    elif log is not None:
        log.write_text("")
    jobs = [CheckJob(r["id"], r["words"], args.method, caps) for r in rows if r["id"] not in done]
    out = open(log, "a", encoding="utf-8") if log is not None else sys.stdout
    results = list(done.values())
    try:
        for rec in run_jobs(jobs, args.workers):
            _emit(out, rec)
            results.append(rec)
    except CheckerDisagreement as exc:
        print(f"check: checkers disagree: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    finally:
        if out is not sys.stdout:
            out.close()
    counts = summarize(results)
    print(json.dumps({"summary": counts}), file=sys.stderr)
    if counts["Inconclusive"] or (counts["NotPureDiscrete"] and not args.allow_negative):
        return EXIT_FAILED
    return EXIT_OK


# -- table1 ------------------------------------------------------------------


def _fixture(name: str) -> dict:
    return json.loads(resources.files("pisotcheck.data").joinpath(name).read_text())


def _fmt(xs) -> str:
    return "+".join(str(x) for x in xs)


def cmd_table1(args) -> int:
    rows = table1(explicit=args.explicit)
    totals = table1_totals(rows)
    if args.format == "json":
        print(json.dumps({"rows": [r.as_dict() for r in rows], "totals": totals}))
    else:
        print(f"{'p':>2} {'r':>3} {'q':<14} {'matrices':>8} {'substitutions':>14}")
        for r in rows:
            qs = ",".join(map(str, r.qs))
            print(f"{r.p:>2} {r.r:>3} {qs:<14} {_fmt(r.matrices):>8} {_fmt(r.substitutions):>14}")
        print(f"total substitutions {totals['substitutions']}, unit {totals['unit_substitutions']}")
    if not args.verify:
        return EXIT_OK
    expected = _fixture("table1.json")
    diffs = []
    got = {(r.p, r.r): r.as_dict() for r in rows}
    for row in expected["rows"]:
        mine = got.pop((row["p"], row["r"]), None)
        if mine != row:
            diffs.append(f"row p={row['p']} r={row['r']}: expected {row}, computed {mine}")
    diffs += [f"unexpected row {k}" for k in got]
    for key, val in expected["totals"].items():
        if totals[key] != val:
            diffs.append(f"{key}: expected {val}, computed {totals[key]}")
    for d in diffs:
        print(d, file=sys.stderr)
    print("table1 verify: " + ("OK" if not diffs else f"{len(diffs)} mismatches"), file=sys.stderr)
    return EXIT_OK if not diffs else EXIT_FAILED


# -- kenyon ------------------------------------------------------------------


def cmd_kenyon(args) -> int:
    report = kenyon_report(args.max, as_printed=args.as_printed)
    for rec in report:
        print(json.dumps(rec, separators=(",", ":")))
    ok = all(r["area_check"] for r in report)
    print(json.dumps({"triples": len(report), "area_check_all": ok}), file=sys.stderr)
    return EXIT_OK


# -- example -----------------------------------------------------------------


def factored_charpoly_text(s: Substitution) -> str:
    factors = factor_integer_polynomial(char_poly(incidence_matrix(s)))
    return "".join(f"({f})" for f in factors)


def example_report(name: str) -> dict:
    s = EXAMPLES[name]
    v = overlap_check(suspension(s))
    rec = {
        "id": name,
        "words": s.text(),
        "charpoly": factored_charpoly_text(s),
        "status": v.status.value,
        "nodes": v.nodes,
        "edges": v.edges,
        "scc_size": v.scc_size,
    }
    if name == "4iet":
        comp = extract_noncoincident_component(v)
        isos = letter_isomorphisms(comp, FOUR_IET_COMPONENT)
        rec["component"] = comp.text()
        rec["image_lengths"] = sorted(len(w) for w in comp.images)
        rec["isomorphic_to_reference"] = bool(isos)
        if isos:
            rec["relabelling"] = {str(a): FOUR_IET_COMPONENT_LETTERS[b - 1] for a, b in enumerate(isos[0], 1)}
        rec["case_swap_is_automorphism"] = FOUR_IET_CASE_SWAP in automorphisms(FOUR_IET_COMPONENT) and bool(isos)
    return rec


def cmd_example(args) -> int:
    if args.charpoly:
        print(factored_charpoly_text(EXAMPLES[args.name]))
        return EXIT_OK
    print(json.dumps(example_report(args.name), separators=(",", ":")))
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pisotcheck", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="stream substitution records as JSONL")
    e.add_argument("--trace", type=int, choices=TRACES, required=True)
    e.add_argument("--q", type=int)
    e.add_argument("--r", type=int)
    e.add_argument("--sample", type=int, help="deterministic sample size")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--output", "-o")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check", help="decide pure discreteness for JSONL records")
    c.add_argument("input", nargs="?", default="-")
    c.add_argument("--method", choices=METHODS, default="overlap")
    c.add_argument("--workers", type=int, default=default_workers())
    c.add_argument("--max-nodes", type=int, default=Caps.max_nodes)
    c.add_argument("--max-pair-length", type=int, default=Caps.max_pair_length)
    c.add_argument("--max-pairs", type=int, default=Caps.max_pairs)
    c.add_argument("--output", "-o")
    c.add_argument("--resume", action="store_true")
    c.add_argument("--allow-negative", action="store_true", help="NotPureDiscrete does not fail the run")
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("table1", help="matrix and substitution counts per (p, r)")
    t.add_argument("--verify", action="store_true")
    t.add_argument("--explicit", action="store_true", help="generate substitutions instead of counting")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_table1)

    k = sub.add_parser("kenyon", help="admissible triples, tile systems and area checks")
    k.add_argument("--max", type=int, default=3)
    k.add_argument("--as-printed", action="store_true")
    k.set_defaults(func=cmd_kenyon)

    x = sub.add_parser("example", help="worked examples")
    x.add_argument("--name", choices=sorted(EXAMPLES), required=True)
    x.add_argument("--charpoly", action="store_true")
    x.set_defaults(func=cmd_example)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        print("check: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    for cap in ("max_nodes", "max_pair_length", "max_pairs"):
        if getattr(args, cap, 1) < 1:
            print(f"check: --{cap.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed early, e.g. `| head`; silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
