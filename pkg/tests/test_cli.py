import json

import pytest

from pisotcheck import check as check_mod
from pisotcheck import cli
from pisotcheck.check import read_log, strip_timing
from pisotcheck.spectra.verdict import Status, Verdict


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(text):
    return [json.loads(x) for x in text.splitlines() if x.strip()]


def test_enumerate_counts(capsys):
    assert len(lines(run(capsys, "enumerate", "--trace", "0")[1])) == 1
    assert len(lines(run(capsys, "enumerate", "--trace", "1")[1])) == 61 + 457
    assert len(lines(run(capsys, "enumerate", "--trace", "2", "--r", "-1")[1])) == 39


def test_enumerate_sample_is_deterministic(capsys):
    a = run(capsys, "enumerate", "--trace", "1", "--sample", "5", "--seed", "3")[1]
    b = run(capsys, "enumerate", "--trace", "1", "--sample", "5", "--seed", "3")[1]
    assert a == b and len(lines(a)) == 5


def test_enumerate_rejects_trace_three(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["enumerate", "--trace", "3"])
    assert exc.value.code == 2


def _records(tmp_path, capsys, *extra):
    path = tmp_path / "in.jsonl"
    path.write_text(run(capsys, "enumerate", *extra)[1])
    return path


def test_check_trace_zero(tmp_path, capsys):
    src = _records(tmp_path, capsys, "--trace", "0")
    code, out, _ = run(capsys, "check", str(src), "--method", "both")
    (rec,) = lines(out)
    assert code == 0
    assert rec["status"] == "PureDiscrete" and rec["balanced"] == "PureDiscrete"
    assert set(rec) >= {"id", "status", "method", "nodes", "edges", "scc_size", "witness_digest", "runtime_ms"}


def test_example_piped_into_check(tmp_path, capsys):
    code, out, _ = run(capsys, "example", "--name", "4iet")
    rep = json.loads(out)
    assert rep["status"] == "NotPureDiscrete" and rep["scc_size"] == 12
    assert rep["isomorphic_to_reference"] and rep["case_swap_is_automorphism"]
    src = tmp_path / "ex.jsonl"
    src.write_text(out)
    code, out, _ = run(capsys, "check", str(src))
    assert code == 1 and lines(out)[0]["status"] == "NotPureDiscrete"
    code, out, _ = run(capsys, "check", str(src), "--allow-negative")
    assert code == 0


def test_example_charpoly(capsys):
    assert run(capsys, "example", "--name", "4iet", "--charpoly")[1].strip() == "(x^2 - 3x + 1)(x^2 - 6x + 1)"


def test_inconclusive_exit_code(tmp_path, capsys):
    src = _records(tmp_path, capsys, "--trace", "0")
    code, out, _ = run(capsys, "check", str(src), "--max-nodes", "2")
    assert code == 1 and lines(out)[0]["status"] == "Inconclusive"


def test_bad_input(tmp_path, capsys):
    assert run(capsys, "check", str(tmp_path / "missing.jsonl"))[0] == 2
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"id": 1}\n')
    assert run(capsys, "check", str(bad))[0] == 2
    src = _records(tmp_path, capsys, "--trace", "0")
    assert run(capsys, "check", str(src), "--workers", "0")[0] == 2


def test_disagreement_is_a_hard_error(tmp_path, capsys, monkeypatch):
    src = _records(tmp_path, capsys, "--trace", "0")

    def fake(t, caps):
        return Verdict(Status.NOT_PURE_DISCRETE, "overlap", {}, 1, 1, 1)

    monkeypatch.setattr(check_mod, "overlap_check", fake)
    code, _, err = run(capsys, "check", str(src), "--method", "both")
    assert code == 3 and "disagree" in err


def test_resume_after_torn_write(tmp_path, capsys):
    src = _records(tmp_path, capsys, "--trace", "1", "--sample", "8", "--seed", "2")
    full = tmp_path / "full.jsonl"
    assert run(capsys, "check", str(src), "-o", str(full))[0] == 0
    done = full.read_text().splitlines()
    part = tmp_path / "part.jsonl"
    part.write_text("\n".join(done[:3]) + "\n" + done[3][:17])
    assert run(capsys, "check", str(src), "-o", str(part), "--resume")[0] == 0
    a = [strip_timing(r) for r in read_log(full)]
    b = [strip_timing(r) for r in read_log(part)]
    assert a == b
    assert len({r["id"] for r in b}) == len(b)


def test_worker_count_does_not_change_log(tmp_path, capsys):
    src = _records(tmp_path, capsys, "--trace", "1", "--sample", "12", "--seed", "1")
    logs = []
    for w in ("1", "2"):
        out = tmp_path / f"w{w}.jsonl"
        assert run(capsys, "check", str(src), "-o", str(out), "--workers", w, "--method", "both",
                   "--max-pair-length", "1000000")[0] == 0
        logs.append([strip_timing(r) for r in read_log(out)])
    assert logs[0] == logs[1]


def test_workers_env_default(monkeypatch):
    monkeypatch.setenv(check_mod.WORKERS_ENV, "3")
    assert check_mod.default_workers() == 3
    monkeypatch.setenv(check_mod.WORKERS_ENV, "junk")
    assert check_mod.default_workers() == 1


def test_table1_verify(capsys, monkeypatch):
    code, out, err = run(capsys, "table1", "--verify")
    assert code == 0 and "72+97" in out and "10586+46348" in out and "446683" in out
    real = cli._fixture

    def tampered(name):
        data = real(name)
        data["rows"][1]["matrices"] = [13]
        return data

    monkeypatch.setattr(cli, "_fixture", tampered)
    code, _, err = run(capsys, "table1", "--verify")
    assert code == 1 and "p=1 r=1" in err


def test_kenyon_command(capsys):
    code, out, _ = run(capsys, "kenyon", "--max", "3")
    recs = lines(out)
    assert code == 0 and len(recs) == 34
    assert all(r["area_check"] for r in recs)
    assert recs[0]["p"] == 0 and recs[0]["q"] == 1 and recs[0]["r"] == 1
