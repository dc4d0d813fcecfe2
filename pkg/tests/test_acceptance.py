"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py [workers]``.
"""

import json
import os
import sys
import tempfile
import time
from itertools import permutations, product
from pathlib import Path

import mpmath
import sympy

from pisotcheck.algebra import (
    RootOnUnitCircleError,
    char_poly,
    cubic,
    cubic_pisot_criterion,
    is_pisot_polynomial,
    kenyon_cubic,
    perron_data,
    roots_inside_unit_circle,
    unified_criterion,
)
from pisotcheck.algebra.roots import count_inside_unit_circle
from pisotcheck.check import CheckJob, run_jobs, strip_timing
from pisotcheck.cli import example_report
from pisotcheck.enumeration import enumerate_matrices, enumerate_records, sample_records, table1, table1_totals
from pisotcheck.examples import FOUR_IET
from pisotcheck.kenyon import enumerate_admissible, kenyon_report, published_triples
from pisotcheck.spectra.overlap import Caps, build_overlap_graph, overlap_length
from pisotcheck.spectra.suspension import suspension, vadd
from pisotcheck.substitution import incidence_matrix, mirror, permute_matrix

FIXTURE = json.loads((Path(__file__).parents[1] / "src/pisotcheck/data/table1.json").read_text())
P2_SAMPLE = 500
P2_SEED = 20100101
BPA_CAPS = Caps(max_pair_length=1_000_000)
RESULTS: dict[int, tuple[bool, str]] = {}


def _write_log(logdir: Path, n: int, rows) -> None:
    with open(logdir / f"criterion{n}.jsonl", "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True, separators=(",", ":")) + "\n")


def _expected_rows():
    return {(r["p"], r["r"]): r for r in FIXTURE["rows"]}


def criterion_1(logdir: Path, workers: int = 1):
    t0 = time.perf_counter()
    rows = table1()
    elapsed = time.perf_counter() - t0
    expected = _expected_rows()
    got = {(r.p, r.r): list(r.matrices) for r in rows}
    bad = [k for k, row in expected.items() if got.get(k) != row["matrices"]] + sorted(set(got) - set(expected))
    _write_log(logdir, 1, [{"p": r.p, "r": r.r, "matrices": list(r.matrices)} for r in rows])
    ok = not bad and got[(1, 1)] == [12] and got[(2, 3)] == [59, 93] and elapsed <= 60
    return ok, f"{len(rows)} rows, mismatches {bad}, {sum(map(sum, got.values()))} classes, {elapsed:.1f}s"


def criterion_2(logdir: Path, workers: int = 1):
    t0 = time.perf_counter()
    rows = table1(explicit=True)
    elapsed = time.perf_counter() - t0
    totals = table1_totals(rows)
    expected = _expected_rows()
    got = {(r.p, r.r): list(r.substitutions) for r in rows}
    bad = [k for k, row in expected.items() if got.get(k) != row["substitutions"]]
    _write_log(logdir, 2, [r.as_dict() for r in rows] + [totals])
    ok = (
        not bad
        and got[(2, 2)] == [10586, 46348]
        and totals["substitutions"] == 446683
        and totals["unit_substitutions"] == 7377
        and elapsed <= 600
    )
    return ok, f"totals {totals}, mismatches {bad}, {elapsed:.1f}s"


def criterion_3(logdir: Path, workers: int = 1):
    t0 = time.perf_counter()
    low = [r for p in (0, 1) for r in enumerate_records(p)]
    jobs = [CheckJob(r.id, r.substitution.text(), "both", BPA_CAPS) for r in low]
    low_recs = list(run_jobs(jobs, workers))
    t_low = time.perf_counter() - t0
    low_ok = len(low_recs) == 519 and all(
        r["status"] == "PureDiscrete" and r["balanced"] == "PureDiscrete" for r in low_recs
    )
    t1 = time.perf_counter()
    sample = sample_records(list(enumerate_records(2)), P2_SAMPLE, P2_SEED)
    high_recs = list(run_jobs([CheckJob(r.id, r.substitution.text()) for r in sample], workers))
    t_high = time.perf_counter() - t1
    high_ok = len(high_recs) == P2_SAMPLE and all(r["status"] == "PureDiscrete" for r in high_recs)
    _write_log(logdir, 3, low_recs + high_recs)
    bad = [r["id"] for r in low_recs + high_recs if r["status"] != "PureDiscrete"]
    ok = low_ok and high_ok and t_low <= 1800 and t_high <= 7200
    return ok, f"p<=1: {len(low_recs)} in {t_low:.0f}s; p=2 sample: {len(high_recs)} in {t_high:.0f}s; not PD {bad[:10]}"


def criterion_4(logdir: Path, workers: int = 1):
    t0 = time.perf_counter()
    rep = example_report("4iet")
    elapsed = time.perf_counter() - t0
    _write_log(logdir, 4, [rep])
    ok = (
        rep["status"] == "NotPureDiscrete"
        and rep["scc_size"] == 12
        and rep["image_lengths"] == sorted([9, 10, 4, 9, 10, 4, 7, 7, 6, 6, 3, 3])
        and rep["isomorphic_to_reference"]
        and rep["case_swap_is_automorphism"]
        and rep["charpoly"] == "(x^2 - 3x + 1)(x^2 - 6x + 1)"
        and elapsed <= 300
    )
    return ok, f"{rep['status']}, scc {rep['scc_size']}, charpoly {rep['charpoly']}, {elapsed:.1f}s"


def criterion_5(logdir: Path, workers: int = 1):
    t0 = time.perf_counter()
    triples = enumerate_admissible(3)
    same = triples == published_triples()
    grid, on_circle, bad = [], 0, []
    for p, q, r in product(range(11), range(11), range(1, 11)):
        if p == q == 0:
            continue
        f = kenyon_cubic(p, q, r)
        try:
            n = roots_inside_unit_circle(p, q, r)
        except RootOnUnitCircleError:
            on_circle += 1
            # certified: +-1 is an exact root
            if f(1) != 0 and f(-1) != 0:
                bad.append((p, q, r))
            grid.append([p, q, r, None])
            continue
        # count_inside_unit_circle uses certified root discs
        if not (n == count_inside_unit_circle(f) and (n == 1) == unified_criterion(p, q, r)):
            bad.append((p, q, r))
        grid.append([p, q, r, n])
    elapsed = time.perf_counter() - t0
    _write_log(logdir, 5, kenyon_report(3) + [{"grid": grid}])
    ok = same and len(triples) == 34 and not bad and elapsed <= 60
    return ok, f"{len(triples)} triples, match {same}; grid {len(grid)} ({on_circle} with a root at +-1), disagreements {bad[:5]}, {elapsed:.1f}s"


def _oracle_pisot(p, q, r) -> bool:
    x = sympy.Symbol("x")
    if r == 0 or not sympy.Poly(x**3 - p * x**2 - q * x - r, x).is_irreducible:
        return False
    roots = mpmath.polyroots([1, -p, -q, -r], maxsteps=200, extraprec=300)
    big = [z for z in roots if abs(z) > 1]
    return len(big) == 1 and sum(abs(z) < 1 for z in roots) == 2 and abs(big[0].imag) < 1e-40 and big[0].real > 1


def _graph_properties(s) -> tuple[int, list[str]]:
    t = suspension(s)
    g = build_overlap_graph(t)
    errs = []
    for k, o in enumerate(g.nodes):
        total = t.zero
        for c in g.children[k]:
            total = vadd(total, overlap_length(t, g.nodes[c]))
        if total != t.field.mul_beta(overlap_length(t, o)):
            errs.append(f"conservation {s.text()} node {k}")
        if o.is_coincidence() and not all(g.nodes[c].is_coincidence() for c in g.children[k]):
            errs.append(f"absorbing {s.text()} node {k}")
    return len(g.nodes), errs


def criterion_6(logdir: Path, workers: int = 1):
    mpmath.mp.dps = 50
    errs = []
    classes = [c for p in (0, 1, 2) for c in enumerate_matrices(p)]
    for c in classes:
        M = c.canonical
        pd = perron_data(M)
        ell = pd.left_eigenvector
        for j in range(3):
            if sum((ell[i] * M[i][j] for i in range(3)), pd.field.zero()) != pd.beta * ell[j]:
                errs.append(f"eigen {M}")
        f = char_poly(M)
        if any(char_poly(permute_matrix(M, pi)) != f for pi in permutations((1, 2, 3))):
            errs.append(f"relabel {M}")
    records = [r for p in (0, 1) for r in enumerate_records(p)]
    records += sample_records(list(enumerate_records(2)), 50, P2_SEED)
    nodes = 0
    for rec in records:
        s = rec.substitution
        if char_poly(incidence_matrix(mirror(s))) != char_poly(incidence_matrix(s)):
            errs.append(f"mirror {s.text()}")
        n, e = _graph_properties(s)
        nodes += n
        errs += e
    n, e = _graph_properties(FOUR_IET)
    nodes += n
    errs += e
    for p, q, r in product(range(-5, 6), repeat=3):
        want = _oracle_pisot(p, q, r)
        if cubic_pisot_criterion(p, q, r) != want or is_pisot_polynomial(cubic(p, q, r)) != want:
            errs.append(f"pisot {(p, q, r)}")
    detail = f"{len(classes)} classes, {len(records) + 1} graphs, {nodes} nodes, 1331 Pisot triples, errors {errs[:5]}"
    return not errs, detail


def _read_stripped(path: Path) -> list[dict]:
    return [strip_timing(json.loads(line)) for line in path.read_text().splitlines()]


def criterion_7(logdir: Path, workers: int = 1, other_workers: int = 2):
    other = Path(tempfile.mkdtemp(prefix="pisotcheck-w"))
    for n in range(1, 6):
        if not (logdir / f"criterion{n}.jsonl").exists():
            CRITERIA[n](logdir, workers)
        CRITERIA[n](other, other_workers)
    diff = [n for n in range(1, 6) if _read_stripped(logdir / f"criterion{n}.jsonl") != _read_stripped(other / f"criterion{n}.jsonl")]
    return not diff, f"workers {workers} vs {other_workers}: logs differing {diff or 'none'}"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6, 7: criterion_7}


def line(n: int) -> str:
    ok, detail = RESULTS[n]
    return f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}"


def _run(n: int, logdir: Path, workers: int = 1) -> bool:
    try:
        RESULTS[n] = CRITERIA[n](logdir, workers)
    except Exception as exc:  # a crash is a failed criterion, reported like the others
        RESULTS[n] = (False, f"{type(exc).__name__}: {exc}")
    print(line(n))
    return RESULTS[n][0]


# -- pytest ------------------------------------------------------------------

import pytest  # noqa: E402


@pytest.fixture(scope="module")
def logdir(tmp_path_factory):
    return tmp_path_factory.mktemp("acceptance")


@pytest.mark.slow
@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, logdir):
    assert _run(n, logdir), line(n)


if __name__ == "__main__":
    workers = int(sys.argv[1]) if len(sys.argv) > 1 else int(os.environ.get("PISOTCHECK_WORKERS", "1"))
    out = Path(tempfile.mkdtemp(prefix="pisotcheck-acceptance"))
    for n in range(1, 7):
        _run(n, out, workers)
    RESULTS[7] = criterion_7(out, workers, 2 if workers == 1 else 1)
    print(line(7))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
