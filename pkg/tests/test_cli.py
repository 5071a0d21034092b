"""Command line behavior: output formats, exit codes, cache wiring."""
import json
import subprocess
import sys

import pytest

from bernmod.cli import main

EXPECTED_WILSON_CSV = """\
identity,params,modulus,lhs,rhs,status
wilson,p=5,5,4,4,verified
wilson,p=7,7,6,6,verified
wilson,p=11,11,10,10,verified
wilson,p=13,13,12,12,verified
wilson,p=17,17,16,16,verified
wilson,p=19,19,18,18,verified
"""


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_wilson_csv(capsys):
    code, out, err = run(
        ["verify", "--primes", "5..20", "--identity", "wilson",
         "--format", "csv", "--no-timestamps"], capsys)
    assert code == 0
    assert out == EXPECTED_WILSON_CSV
    assert "6 verified" in err


def test_verify_json_lines_shape(capsys):
    code, out, err = run(
        ["verify", "--primes", "5..11", "--identity", "result2"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["params"]["p"] for r in rows] == [5, 7, 11]
    for row in rows:
        assert set(row) == {"identity", "params", "modulus", "lhs", "rhs",
                            "status", "elapsed_ms", "timestamp"}
        assert row["status"] == "verified"
        assert row["lhs"] == row["rhs"]
        assert row["modulus"] == row["params"]["p"]


def test_no_timestamps_strips_volatile_fields(capsys):
    code, out, _ = run(
        ["verify", "--primes", "5..11", "--identity", "result2",
         "--no-timestamps"], capsys)
    assert code == 0
    for line in out.splitlines():
        row = json.loads(line)
        assert set(row) == {"identity", "params", "modulus", "lhs", "rhs",
                            "status"}


def test_no_timestamps_output_is_reproducible(capsys):
    argv = ["verify", "--primes", "5..23", "--identity", "lemma2",
            "--no-timestamps"]
    code_a, out_a, _ = run(argv, capsys)
    code_b, out_b, _ = run(argv, capsys)
    assert code_a == code_b == 0
    assert out_a == out_b


def test_jobs_do_not_change_output(capsys):
    base = ["verify", "--primes", "5..19", "--identity", "eisenstein",
            "--identity", "result4", "--no-timestamps"]
    _, serial, _ = run(base, capsys)
    _, parallel, _ = run(base + ["--jobs", "2"], capsys)
    assert serial == parallel


def test_verify_out_file(tmp_path, capsys):
    target = tmp_path / "reports.jsonl"
    code, out, _ = run(
        ["verify", "--primes", "5..7", "--identity", "wilson",
         "--out", str(target), "--no-timestamps"], capsys)
    assert code == 0
    assert out == ""
    rows = [json.loads(line) for line in target.read_text().splitlines()]
    assert [r["params"]["p"] for r in rows] == [5, 7]


def test_verify_modulus_override_failure_exits_one(capsys):
    code, out, err = run(
        ["verify", "--primes", "5..7", "--identity", "conv_order_p1",
         "--modulus", "2", "--no-timestamps"], capsys)
    assert code == 1
    statuses = [json.loads(line)["status"] for line in out.splitlines()]
    assert "failed" in statuses
    assert "failed" in err


def test_verify_verbose_echoes_points(capsys):
    code, _, err = run(
        ["verify", "--primes", "5..7", "--identity", "wilson", "-v",
         "--no-timestamps"], capsys)
    assert code == 0
    assert "wilson p=5 verified" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--primes", "3..10"],
    ["verify", "--primes", "11..7"],
    ["verify", "--primes", "5-7"],
    ["verify", "--primes", "5..7", "--identity", "nope"],
    ["oracle", "12"],
    ["compute", "q2", "8"],
    ["compute", "nk"],
    ["compute", "bernoulli", "-5"],
])
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv,expected", [
    (["compute", "bernoulli", "12"], "-691/2730"),
    (["compute", "bernoulli", "0"], "1"),
    (["compute", "bernoulli", "1", "--convention", "plus_half"], "1/2"),
    (["compute", "eulerian", "5", "2"], "66"),
    (["compute", "eulerian", "20", "10", "--p", "7", "--k", "2"], "10"),
    (["compute", "harmonic", "4"], "25/12"),
    (["compute", "harmonic", "3", "--order", "2"], "49/36"),
    (["compute", "nk", "5"], "68"),
    (["compute", "nk", "--p", "7", "--k", "2"], "19"),
    (["compute", "q2", "7"], "9"),
    (["compute", "conv", "--p", "5"], "1/144"),
    (["compute", "conv", "--p", "5", "--a", "1"], "1/36"),
])
def test_compute_frozen_outputs(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.strip() == expected


def test_oracle_reports_agreement(capsys):
    code, out, _ = run(["oracle", "5"], capsys)
    assert code == 0
    assert "eulerian row: 1 26 66 26 1" in out
    assert "even-ascent total: 68" in out
    assert "alternating total: 16" in out
    assert "agreement OK" in out


def test_verify_cache_is_created_and_reused(tmp_path, capsys):
    cache = tmp_path / "bern.cache"
    argv = ["verify", "--primes", "5..11", "--identity", "glaisher",
            "--cache", str(cache), "--no-timestamps"]
    code, _, _ = run(argv, capsys)
    assert code == 0
    assert cache.exists()
    first = cache.read_text()
    assert first.startswith("BERNCACHE 1 minus_half")
    code, _, err = run(argv, capsys)
    assert code == 0
    assert "warning" not in err


def test_verify_corrupt_cache_warns_but_runs(tmp_path, capsys):
    cache = tmp_path / "bern.cache"
    cache.write_text("BERNCACHE 1 minus_half\n0 2 1\n")
    code, out, err = run(
        ["verify", "--primes", "5..7", "--identity", "wilson",
         "--cache", str(cache), "--no-timestamps"], capsys)
    assert code == 0
    assert "warning" in err
    assert len(out.splitlines()) == 2


def test_compute_bernoulli_env_cache(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "bern.cache"
    monkeypatch.setenv("BERNMOD_CACHE", str(cache))
    code, out, _ = run(["compute", "bernoulli", "10"], capsys)
    assert code == 0
    assert out.strip() == "5/66"
    assert cache.exists()
    assert "10 5 66" in cache.read_text()


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "bernmod", "compute", "bernoulli", "12"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-691/2730"
