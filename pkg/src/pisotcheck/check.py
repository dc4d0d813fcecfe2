"""Run the spectral checkers on one substitution and on streams of records."""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator

from .algebra import char_poly, is_irreducible
from .spectra.balanced_pair import balanced_pair_check
from .spectra.overlap import Caps
from .spectra.suspension import suspension
from .spectra.verdict import Status, overlap_check
from .substitution import Substitution, incidence_matrix

METHODS = ("overlap", "balanced", "both")
WORKERS_ENV = "PISOTCHECK_WORKERS"
TIMING_FIELDS = ("runtime_ms",)


class CheckerDisagreement(RuntimeError):
    pass


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class CheckJob:
    id: object
    words: str
    method: str = "overlap"
    caps: Caps = Caps()


def check_substitution(s: Substitution, method: str = "overlap", caps: Caps = Caps(), rec_id=None) -> dict:
    """One verdict record.  With ``both``, the balanced pair run is skipped on reducible input."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    t0 = time.perf_counter()
    if method == "balanced":
        v = balanced_pair_check(s, caps)
        return v.record(rec_id, _ms(t0))
    v = overlap_check(suspension(s), caps)
    if method == "overlap":
        return v.record(rec_id, _ms(t0))
    rec = v.record(rec_id, None)
    rec["method"] = "both"
    if is_irreducible(char_poly(incidence_matrix(s))):
        b = balanced_pair_check(s, caps)
        statuses = {v.status, b.status}
        if statuses == {Status.PURE_DISCRETE, Status.NOT_PURE_DISCRETE}:
            raise CheckerDisagreement(f"{rec_id}: overlap says {v.status.value}, balanced pair says {b.status.value}")
        rec["balanced"] = b.status.value
        if v.status == Status.INCONCLUSIVE and b.status == Status.PURE_DISCRETE:
            rec["status"] = b.status.value
        blob = (v.witness_digest() + b.witness_digest()).encode()
        rec["witness_digest"] = hashlib.sha256(blob).hexdigest()[:16]
    else:
        rec["balanced"] = None
    rec["runtime_ms"] = _ms(t0)
    return rec


def _ms(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def run_job(job: CheckJob) -> dict:
    return check_substitution(Substitution.parse(job.words), job.method, job.caps, job.id)


def run_jobs(jobs: Iterable[CheckJob], workers: int = 1) -> Iterator[dict]:
    """Records in input order whatever the worker count."""
    if workers <= 1:
        for job in jobs:
            yield run_job(job)
        return
    with Pool(workers) as pool:
        yield from pool.imap(run_job, jobs, chunksize=4)


# -- result logs -------------------------------------------------------------


def read_log(path: Path) -> list[dict]:
    """Complete records of a JSONL log; a torn final line is dropped from the file."""
    if not path.exists():
        return []
    raw = path.read_bytes()
    keep = raw.rfind(b"\n") + 1
    if keep != len(raw):
        with open(path, "r+b") as fh:
            fh.truncate(keep)
    return [json.loads(line) for line in raw[:keep].decode().splitlines() if line.strip()]


def strip_timing(rec: dict) -> dict:
    return {k: v for k, v in rec.items() if k not in TIMING_FIELDS}


def summarize(records: Iterable[dict]) -> dict[str, int]:
    out = {s.value: 0 for s in Status}
    for r in records:
        out[r["status"]] = out.get(r["status"], 0) + 1
    return out
