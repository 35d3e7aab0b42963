import json
import shutil
import subprocess
import sys

import pytest

from fpzeta.cli import RunRecord, SUITES, compute_record, golden_dir, main, parse_primes, UsageError
from fpzeta.ffield import NotPrimeError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_heisenberg(capsys):
    code, out, _ = run(capsys, "compute", "--ring", "heisenberg", "--prime", "3", "--flavor", "ideal")
    rec = json.loads(out)
    assert code == 0 and rec["coefficients"] == [1, 4, 1, 1]
    assert list(rec) == ["ring", "params", "p", "flavor", "method", "coefficients", "meta"]
    assert set(rec["meta"]) == {"elapsed_ms", "nodes"}


def test_compute_tr1(capsys):
    code, out, _ = run(capsys, "compute", "--ring", "tr", "--param", "n=1", "--prime", "7")
    assert code == 0 and json.loads(out)["coefficients"] == [1, 1]


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "--ring", "heisenberg", "--prime", "3", "--format", "text")
    assert code == 0 and out.strip() == "1 + (4)t + (1)t^2 + (1)t^3"


def test_compute_without_meta_is_byte_identical(capsys):
    argv = ("compute", "--ring", "M", "--param", "c=3", "--prime", "3", "--no-meta")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b and "meta" not in json.loads(a)


def test_not_prime(capsys):
    code, _, err = run(capsys, "compute", "--ring", "heisenberg", "--prime", "4")
    assert code == 2 and "4 is not prime" in err


@pytest.mark.parametrize("argv", [
    ("compute", "--ring", "nosuchring", "--prime", "3"),
    ("compute", "--ring", "M", "--prime", "3"),
    ("compute", "--ring", "M", "--param", "c=x", "--prime", "3"),
    ("compute", "--ring", "sl2", "--prime", "3", "--method", "class2"),
    ("compute", "--ring", "missing/file.ring", "--prime", "3"),
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_budget_exhaustion(capsys):
    code, out, err = run(capsys, "compute", "--ring", "fil4", "--prime", "3", "--budget", "5")
    assert code == 3 and out == "" and "budget" in err


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "--bogus"])
    assert exc.value.code == 2


def test_ring_file(tmp_path, capsys):
    path = tmp_path / "h.ring"
    path.write_text("# heisenberg\nname h\ndim 3\nbracket 1 2 = 1*3\n")
    code, out, _ = run(capsys, "compute", "--ring", str(path), "--prime", "5", "--flavor", "sub")
    assert code == 0 and json.loads(out)["coefficients"] == [1, 6, 31, 1]
    bad = tmp_path / "bad.ring"
    bad.write_text("dim 3\nbracket 1 2 =\n")
    code, _, err = run(capsys, "compute", "--ring", str(bad), "--prime", "5")
    assert code == 2 and "line 2" in err


def test_json_round_trip():
    for case in SUITES["heisenberg"] + SUITES["mc-ideal"][:2]:
        rec = compute_record(case.ring, case.params_dict, 2, case.flavor)
        for meta in (True, False):
            back = RunRecord.from_dict(json.loads(rec.to_json(meta)))
            assert back.to_json(meta) == rec.to_json(meta)


def test_parse_primes():
    assert parse_primes("2:13") == [2, 3, 5, 7, 11, 13]
    assert parse_primes("7,3,5") == [3, 5, 7]
    with pytest.raises(NotPrimeError):
        parse_primes("3,9")
    for bad in ("", "a:b", "9:2", "x"):
        with pytest.raises(UsageError):
            parse_primes(bad)


def test_verify_heisenberg(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "heisenberg")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 10


def test_verify_detects_golden_mismatch(tmp_path, capsys):
    src = golden_dir() / "heisenberg.json"
    data = json.loads(src.read_text())
    data[0]["coefficients"] = [1, 2, 3]
    (tmp_path / "heisenberg.json").write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--suite", "heisenberg", "--golden-dir", str(tmp_path))
    assert code == 1 and "golden" in out and "verification FAILED" in out


def test_verify_missing_golden_dir(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "heisenberg", "--golden-dir", str(tmp_path / "none"))
    assert code == 1 and "no golden file" in out


def test_regen_golden(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--suite", "mc-ideal", "--primes", "2",
                       "--golden-dir", str(tmp_path), "--regen-golden")
    assert code == 0 and (tmp_path / "mc-ideal.json").is_file()
    assert json.loads((tmp_path / "mc-ideal.json").read_text())
    code, _, _ = run(capsys, "verify", "--suite", "mc-ideal", "--primes", "2", "--golden-dir", str(tmp_path))
    assert code == 0


def test_golden_files_cover_every_suite():
    for name in SUITES:
        assert (golden_dir() / f"{name}.json").is_file(), name


def test_scan_heisenberg(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_THREADS", "1")
    code, out, _ = run(capsys, "scan", "--ring", "heisenberg", "--flavor", "ideal", "--primes", "2:31",
                       "--degree", "2")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "polynomial"
    assert all(c["degree"] <= 1 for c in rep["coefficients"])


def test_scan_insufficient_primes(capsys):
    code, _, err = run(capsys, "scan", "--ring", "heisenberg", "--primes", "2,3,5", "--degree", "2")
    assert code == 2 and "samples" in err


def test_scan_bad_threads(capsys, monkeypatch):
    monkeypatch.setenv("ZETA_THREADS", "many")
    code, _, err = run(capsys, "scan", "--ring", "heisenberg", "--primes", "2:31", "--degree", "2")
    assert code == 2 and "ZETA_THREADS" in err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0
    for name in ("heisenberg", "M", "fil4", "f", "grenham", "L_E", "L_np8", "vl", "sl2", "tr", "H_m",
                 "g53", "g64"):
        assert any(line.split()[0] == name for line in out.splitlines()), name
    code, out, _ = run(capsys, "catalog", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and isinstance(rows, list)
    assert {r["name"]: r["dim"] for r in rows}["L_E"] == 9


@pytest.mark.skipif(shutil.which("zeta") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["zeta", "compute", "--ring", "heisenberg", "--prime", "2", "--no-meta"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["coefficients"] == [1, 3, 1, 1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "fpzeta.cli", "compute", "--ring", "heisenberg",
                          "--prime", "4"], capture_output=True, text=True, check=False)
    assert res.returncode == 2 and "4 is not prime" in res.stderr
