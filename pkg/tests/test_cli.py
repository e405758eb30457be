import csv
import json
import math
import subprocess
import sys

import pytest


def run_cli(*args, **kw):
    return subprocess.run(
        [sys.executable, "-m", "kspecfun", *args],
        capture_output=True,
        text=True,
        timeout=120,
        **kw,
    )


def first_value(stdout: str) -> float:
    for line in stdout.splitlines():
        if line.startswith("value="):
            return float(line.partition("=")[2])
    raise AssertionError(f"no value line in {stdout!r}")


def test_eval_kgamma():
    r = run_cli("eval", "kgamma", "z=2", "k=2")
    assert r.returncode == 0
    assert "value=1.0" in r.stdout


def test_eval_gmkbessel_defaults_give_classical_j():
    r = run_cli("eval", "gmkbessel", "z=2")
    assert r.returncode == 0
    assert first_value(r.stdout) == pytest.approx(0.22389077914123566805, rel=1e-9)
    assert "converged=true" in r.stdout


def test_eval_wright_margin_rejected():
    r = run_cli("eval", "wright", "upper=1:1,2:1", "lower=", "z=0.5")
    assert r.returncode == 2
    assert "margin" in r.stderr


def test_eval_unknown_key():
    r = run_cli("eval", "kgamma", "z=2", "bogus=1")
    assert r.returncode == 2
    assert "bogus" in r.stderr


def test_eval_pfq():
    r = run_cli("eval", "pfq", "upper=1,1", "lower=2", "z=0.5")
    assert r.returncode == 0
    assert first_value(r.stdout) == pytest.approx(2.0 * math.log(2.0), rel=1e-9)


def test_verify_oberhettinger_defaults():
    r = run_cli("verify", "oberhettinger")
    assert r.returncode == 0
    assert "verdict=match" in r.stdout
    lhs = [l for l in r.stdout.splitlines() if l.startswith("lhs=")][0]
    assert float(lhs.partition("=")[2]) == pytest.approx(1.0 / 3.0, rel=1e-7)


def test_verify_precondition_skip():
    r = run_cli("verify", "theorem1", "mu=5", "lam=1")
    assert r.returncode == 1
    assert r.stdout.startswith("skipped: precondition")


def test_verify_theorem2_canonical_only():
    r = run_cli("verify", "theorem2", "mu=0.5")
    assert r.returncode == 0
    assert "verdict=canonical_only" in r.stdout
    assert "ratio" in r.stdout


def test_verify_out_csv(tmp_path):
    out = tmp_path / "row.csv"
    r = run_cli("verify", "oberhettinger", "--out", str(out))
    assert r.returncode == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 1
    assert rows[0]["verdict"] == "match"
    assert rows[0]["identity"] == "oberhettinger"
    assert rows[0]["k"] == ""


def test_sweep_json_lines_roundtrip(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "identity": "oberhettinger",
                "mu": [0.5, 1.0],
                "lam_minus_mu": [1.0],
                "a": [1.0, 2.0],
                "format": "json-lines",
            }
        )
    )
    out = tmp_path / "rows.jsonl"
    r = run_cli("sweep", "--config", str(cfg), "--out", str(out))
    assert r.returncode == 0
    assert "match=4" in r.stdout
    recs = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(recs) == 4
    assert [rec["mu"] for rec in recs] == [0.5, 0.5, 1.0, 1.0]
    for rec in recs:
        assert rec["verdict"] == "match"
        assert rec["lam"] == rec["mu"] + 1.0
        assert rec["rhs_paper"] is None
        assert abs(rec["lhs"] - rec["rhs_canonical"]) <= 1e-5 * abs(rec["lhs"])


def test_sweep_unknown_config_key(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"identity": "oberhettinger", "mu": [1], "bogus": 3}))
    r = run_cli("sweep", "--config", str(cfg))
    assert r.returncode == 2
    assert "bogus" in r.stderr


def test_sweep_lam_conflict(tmp_path):
    cfg = tmp_path / "conflict.json"
    cfg.write_text(
        json.dumps(
            {
                "identity": "oberhettinger",
                "mu": [1.0],
                "lam": [2.0],
                "lam_minus_mu": [1.0],
                "a": [1.0],
            }
        )
    )
    r = run_cli("sweep", "--config", str(cfg))
    assert r.returncode == 2
    assert "lam" in r.stderr


def test_sweep_stdout_records(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps({"identity": "oberhettinger", "mu": [1.0], "lam": [2.0], "a": [1.0]})
    )
    r = run_cli("sweep", "--config", str(cfg))
    assert r.returncode == 0
    assert r.stdout.splitlines()[0].startswith("identity,")
    assert "match=1 canonical_only=0 mismatch=0 skipped=0" in r.stderr


def test_usage_error_exit_code():
    r = run_cli("eval", "kgamma", "z")
    assert r.returncode == 2
