"""CLI behavior: output formats, exit codes, determinism, figure files."""

import json
import subprocess
import sys

import pytest

from dedekind.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sum_human(capsys):
    code, out, _ = run_cli(capsys, "sum", "7", "17")
    assert code == 0
    assert "S(7/17) = 12/17" in out
    assert "residue 12" in out


def test_sum_both_methods_agree(capsys):
    code, out, _ = run_cli(capsys, "sum", "17", "15015", "--method", "both")
    assert code == 0
    assert out.count("2643350/3003") == 2
    assert "methods agree: yes" in out


def test_sum_json(capsys):
    code, out, _ = run_cli(capsys, "sum", "7", "17", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"m": 7, "n": 17, "value": "12/17", "residue": 12, "method": "bhk"}


def test_sum_tsv(capsys):
    code, out, _ = run_cli(capsys, "sum", "1", "1", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["m", "n", "value", "residue", "method"]
    assert lines[1].split("\t") == ["0", "1", "0/1", "0", "bhk"]


def test_sum_noncoprime_exits_2(capsys):
    code, _, err = run_cli(capsys, "sum", "4", "6")
    assert code == 2
    assert "error:" in err


def test_frac(capsys):
    code, out, _ = run_cli(capsys, "frac", "17", "15015")
    assert code == 0
    assert "710/3003" in out
    assert "3550" in out


def test_frac_json(capsys):
    code, out, _ = run_cli(capsys, "frac", "17", "15015", "--format", "json")
    assert json.loads(out) == {
        "m": 17,
        "n": 15015,
        "residue": 3550,
        "fraction": "710/3003",
    }


def test_equal_yes_no(capsys):
    code, out, _ = run_cli(capsys, "equal", "17", "992", "15015")
    assert code == 0
    assert "is an integer: yes" in out
    code, out, _ = run_cli(capsys, "equal", "2", "3", "7")
    assert code == 0
    assert "is an integer: no" in out


def test_equal_json(capsys):
    _, out, _ = run_cli(capsys, "equal", "17", "992", "15015", "--format", "json")
    doc = json.loads(out)
    assert doc["equivalent"] is True
    assert doc["residue_m1"] == doc["residue_m2"] == 3550


def test_enumerate_human_lists_sorted_members(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "17", "15015")
    assert code == 0
    assert "16 members" in out
    # m1 itself is a member and gets bracketed
    assert "members: [17] 563 992 2558" in out
    assert "offset +880: [17] 3533" in out
    assert "offset -32: 8993 9572" in out


def test_enumerate_json_schema(capsys):
    _, out, _ = run_cli(capsys, "enumerate", "17", "15015", "--format", "json")
    doc = json.loads(out)
    assert list(doc) == ["n", "m1", "base", "s", "count", "groups"]
    assert doc["count"] == 16
    assert doc["s"] == 4
    assert doc["groups"][-1] == {"offset": -32, "members": [8993, 9572]}


def test_enumerate_tsv(capsys):
    _, out, _ = run_cli(capsys, "enumerate", "2", "15", "--format", "tsv")
    lines = out.splitlines()
    assert lines[0].split("\t") == ["n", "m1", "offset", "member"]
    assert len(lines) == 3


def test_count_squarefree(capsys):
    code, out, err = run_cli(capsys, "count", "17", "15015")
    assert code == 0
    assert "16 members = 2^4" in out
    assert err == ""


def test_count_non_squarefree_warns(capsys):
    code, out, err = run_cli(capsys, "count", "7", "12")
    assert code == 0
    assert "not square-free" in err
    assert "2 members" in out


def test_count_json(capsys):
    _, out, _ = run_cli(capsys, "count", "2", "15", "--format", "json")
    assert json.loads(out) == {"n": 15, "m1": 2, "count": 2, "s": 1}


def test_classify_human(capsys):
    code, out, _ = run_cli(capsys, "classify", "5")
    assert code == 0
    assert "3 classes over 4 units" in out
    assert "residue 0: 2 3" in out


def test_classify_tsv(capsys):
    _, out, _ = run_cli(capsys, "classify", "5", "--format", "tsv")
    lines = out.splitlines()
    assert lines[0].split("\t") == ["residue", "size", "members"]
    assert lines[1].split("\t") == ["0", "2", "2,3"]


def test_verify_paper_example_passes(capsys):
    code, out, _ = run_cli(capsys, "verify-paper-example")
    assert code == 0
    assert "PASS: 16/16 members matched" in out


def test_verify_paper_example_json(capsys):
    code, out, _ = run_cli(capsys, "verify-paper-example", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert doc["diffs"] == []
    assert doc["base"] == "710/3003"


def test_bench_small(capsys):
    code, out, _ = run_cli(capsys, "bench", "101", "1009", "--reps", "1")
    assert code == 0
    assert "yes" in out
    assert "ok" in out


def test_bench_large_modulus_skips_naive(capsys):
    code, out, _ = run_cli(
        capsys, "bench", str(10**15 + 37), "--m", "2", "--reps", "2",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["naive_seconds"] is None
    assert rows[0]["residue_check"] is True
    assert rows[0]["bhk_seconds"] < 0.001


def test_bench_plot(tmp_path, capsys):
    out_png = tmp_path / "bench.png"
    code, _, err = run_cli(
        capsys, "bench", "101", "1009", "10007", "--reps", "1",
        "--plot", str(out_png),
    )
    assert code == 0
    assert out_png.exists() and out_png.stat().st_size > 0
    assert "figure written" in err


def test_classify_plot(tmp_path, capsys):
    out_png = tmp_path / "classes.png"
    code, _, _ = run_cli(capsys, "classify", "101", "--plot", str(out_png))
    assert code == 0
    assert out_png.exists() and out_png.stat().st_size > 0


def test_selftest_passes(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    assert code == 0
    assert "12/12 checks passed" in out
    assert "FAIL" not in out


def test_deterministic_output(capsys):
    first = run_cli(capsys, "enumerate", "17", "15015", "--format", "json")
    second = run_cli(capsys, "enumerate", "17", "15015", "--format", "json")
    assert first == second


def test_json_round_trips(capsys):
    for argv in (
        ["sum", "7", "17", "--format", "json"],
        ["enumerate", "17", "15015", "--format", "json"],
        ["classify", "30", "--format", "json"],
        ["count", "17", "15015", "--format", "json"],
    ):
        _, out, _ = run_cli(capsys, *argv)
        assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["sum", "7"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dedekind", "sum", "7", "17"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "12/17" in proc.stdout
