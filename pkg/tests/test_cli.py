import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from itertools import product

import pytest

from hyplac.cli import main
from hyplac.report import CSV_HEADER


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def analyze(capsys, *argv):
    code, out, err = run(capsys, "analyze", *argv)
    return code, (json.loads(out) if out else None), err


def test_analyze_finite_example(capsys):
    code, rep, _ = analyze(capsys, "--alpha", "0,1/2", "--beta", "1/4,3/4", "--oracle")
    assert code == 0
    assert rep["schema"] == "hyplac/1"
    assert rep["finite_monodromy"] is True
    assert rep["stability"]["verdict"] == "Stable"
    o = rep["oracle"]
    assert o["closure"] == 8 and o["katz_sum"] == 2 and o["triple_consistent"]
    assert o["hermitian_signature"] in ([2, 0], [0, 2])
    assert rep["gamma"] == "1/2" and rep["N"] == 4 and rep["rigidity_index"] == 2


def test_analyze_unstable_example(capsys):
    code, rep, _ = analyze(capsys, "--alpha", "1/10,3/10", "--beta", "0,1/2")
    assert code == 0 and "oracle" not in rep
    assert rep["finite_monodromy"] is False
    st = rep["stability"]
    assert st["verdict"] == "Unstable"
    w = st["witness"]
    assert (w["case"], w["indices"], w["degree"]) == ("CaseOne", [1], "1/10")
    assert rep["galois"]["first_failing_unit"] == 1


def test_analyze_infinite_oracle(capsys):
    code, rep, _ = analyze(capsys, "--alpha", "0,3/10", "--beta", "1/5,3/5", "--oracle", "--closure-bound", "500")
    assert code == 0
    assert rep["interlacing"]["holds"] and rep["finite_monodromy"] is False
    assert rep["galois"]["first_failing_unit"] == 3
    assert rep["oracle"]["closure"] == "exceeded(500)"


def test_analyze_reducible(capsys):
    code, rep, err = analyze(capsys, "--alpha", "1/2", "--beta", "1/2", "--strict")
    assert code == 3 and rep["irreducible"] is False and "reducible" in err
    code, rep, _ = analyze(capsys, "--alpha", "1/2", "--beta", "1/2")
    assert code == 0 and rep["stability"] is None and rep["degenerate"] == "reducible"
    code, rep, _ = analyze(capsys, "--alpha", "1/3,1/3", "--beta", "0,1/2", "--strict")
    assert code == 3 and rep["generic"] is False


def test_analyze_invalid(capsys):
    code, out, err = run(capsys, "analyze", "--alpha", "0,x", "--beta", "1/4,3/4")
    assert code == 2 and out == "" and "'x'" in err and "position 1" in err
    code, out, err = run(capsys, "analyze", "--alpha", "0,1/2", "--beta", "1/4")
    assert code == 2 and "length" in err
    code, out, err = run(capsys, "analyze", "--alpha", "1/0", "--beta", "1/4")
    assert code == 2


def test_analyze_implicit_beta_one(capsys):
    code, rep, _ = analyze(capsys, "--alpha", "1/2,1/2", "--beta", "1/3", "--implicit-beta-one")
    assert code == 0 and rep["beta"] == ["0", "1/3"] and rep["generic"] is False
    code, rep, _ = analyze(capsys, "--alpha", "1/6,5/6", "--beta", "1/2", "--implicit-beta-one")
    assert rep["beta"] == ["0", "1/2"] and rep["finite_monodromy"] is True


def test_json_indent(capsys):
    _, compact, _ = run(capsys, "analyze", "--alpha", "1/3", "--beta", "2/3", "--json-indent", "0")
    assert compact.count("\n") == 1
    _, pretty, _ = run(capsys, "analyze", "--alpha", "1/3", "--beta", "2/3")
    assert json.loads(compact) == json.loads(pretty)


def test_rerun_on_normalized_echo(capsys):
    _, first, _ = analyze(capsys, "--alpha", "5/4,-1/2", "--beta", "1/3,7/6", "--oracle")
    _, second, _ = analyze(capsys, "--alpha", ",".join(first["alpha"]), "--beta", ",".join(first["beta"]), "--oracle")
    first.pop("input_echo")
    second.pop("input_echo")
    assert first == second


def test_fractions_are_canonical(capsys):
    _, rep, _ = analyze(capsys, "--alpha", "2/4,3/9", "--beta", "6/8,0/5")
    assert rep["alpha"] == ["1/3", "1/2"] and rep["beta"] == ["0", "3/4"]
    assert rep["input_echo"]["alpha"] == ["2/4", "3/9"]


def _rows(text):
    r = list(csv.reader(io.StringIO(text)))
    assert tuple(r[0]) == CSV_HEADER
    return r[1:]


def test_scan_rank_one(capsys):
    code, out, _ = run(capsys, "scan", "--n", "1", "--max-denominator", "3")
    rows = _rows(out)
    assert code == 0 and rows
    assert all(r[5] == "true" and r[6] == "true" for r in rows)


def _brute_force_count(n, Q):
    vals = {Fraction(a, q) for q in range(1, Q + 1) for a in range(q)}
    seen = set()
    for a in product(vals, repeat=n):
        for b in product(vals, repeat=n):
            sa, sb = tuple(sorted(a)), tuple(sorted(b))
            if len(set(sa)) == n and len(set(sb)) == n and not set(sa) & set(sb):
                seen.add((sa, sb))
    return len(seen)


def test_scan_rank_two(capsys):
    code, out, _ = run(capsys, "scan", "--n", "2", "--max-denominator", "4")
    rows = _rows(out)
    assert len(rows) == _brute_force_count(2, 4)
    row = next(r for r in rows if r[0] == "0 1/2" and r[1] == "1/4 3/4")
    assert row[3] == "true" and row[6] == "true" and row[4] == "AlphaFirst" and row[7] == ""
    keys = [(tuple(map(Fraction, r[0].split())), tuple(map(Fraction, r[1].split()))) for r in rows]
    assert keys == sorted(keys)


def test_scan_orbit_dedup(capsys):
    _, full, _ = run(capsys, "scan", "--n", "2", "--max-denominator", "5")
    _, dedup, _ = run(capsys, "scan", "--n", "2", "--max-denominator", "5", "--orbit-dedup")
    a, b = _rows(full), _rows(dedup)
    assert 0 < len(b) < len(a)
    assert set(map(tuple, b)) <= set(map(tuple, a))


def test_scan_to_file(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code, stdout, _ = run(capsys, "scan", "--n", "1", "--max-denominator", "4", "--out", str(out))
    assert code == 0 and stdout == ""
    _, direct, _ = run(capsys, "scan", "--n", "1", "--max-denominator", "4")
    assert out.read_text() == direct
    code, _, err = run(capsys, "scan", "--n", "1", "--max-denominator", "2", "--out", str(tmp_path / "no" / "x.csv"))
    assert code == 2 and "cannot write" in err


def test_scan_jobs_identical(capsys):
    _, one, _ = run(capsys, "scan", "--n", "2", "--max-denominator", "5")
    _, three, _ = run(capsys, "scan", "--n", "2", "--max-denominator", "5", "--jobs", "3")
    assert one == three


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--n", "0", "--max-denominator", "3"])
    assert exc.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hyplac", "analyze", "--alpha", "1/3", "--beta", "2/3"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and json.loads(r.stdout)["finite_monodromy"] is True
