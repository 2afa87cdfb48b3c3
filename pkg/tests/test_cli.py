import csv
import io
import json
import subprocess
import sys

import pytest

from posknots.cli import CSV_FIELDS, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestFactor:
    def test_worked_word(self, capsys):
        code, out, _ = run(capsys, "factor", "122112234343344")
        assert code == 0
        assert out.splitlines()[0] == "F = 2; factors: [1 1 2 2 1 2 2] (B3), [1 1 2 2 1 2 1 2] (B3)"
        assert "components = 2" in out

    def test_trefoil(self, capsys):
        code, out, _ = run(capsys, "factor", "111", "--strands", "2")
        assert code == 0
        assert out.startswith("F = 1 (prime)")
        assert "genus = 1" in out and "alexander = t^-1 - 1 + t" in out

    def test_unknot(self, capsys):
        code, out, _ = run(capsys, "factor", "1 2 3")
        assert code == 0 and out.startswith("F = 0 (unknot)")

    def test_separated_input(self, capsys):
        code, out, _ = run(capsys, "factor", "1,1,1,2,2,2")
        assert code == 0 and out.startswith("F = 2;")

    def test_hopf_knot_only(self, capsys):
        code, _, err = run(capsys, "factor", "11", "--strands", "2", "--knot-only")
        assert code == 3 and "closure has 2 components" in err

    def test_hopf_default_reports_link(self, capsys):
        code, out, _ = run(capsys, "factor", "11", "--strands", "2")
        assert code == 0
        assert "components = 2" in out and "(up to units)" in out

    def test_split_closure(self, capsys):
        code, _, err = run(capsys, "factor", "122112234343844")
        assert code == 3 and "split" in err

    @pytest.mark.parametrize("word", ["abc", "0", "1 -1"])
    def test_parse_error(self, capsys, word):
        code, _, err = run(capsys, "factor", word)
        assert code == 2 and err.startswith("error:")

    def test_strands_too_small(self, capsys):
        assert run(capsys, "factor", "123", "--strands", "3")[0] == 2


class TestBound:
    def test_lorenz(self, capsys):
        code, out, _ = run(capsys, "bound", "preset:lorenz")
        assert code == 0 and out.strip() == "J=1 S=1 B=2 b1=2 N=18"

    def test_two_branch_fixture(self, capsys, fixtures_dir):
        code, out, _ = run(capsys, "bound", str(fixtures_dir / "two_branch.tmpl"))
        assert code == 0 and out.strip() == "J=2 S=2 B=4 b1=3 N=4954"

    def test_malformed(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "bound", str(fixtures_dir / "unknown_line.tmpl"))
        assert code == 2 and "line 4" in err and "unknown branch line" in err


class TestCensus:
    def test_csv(self, capsys, fixtures_dir):
        code, out, err = run(capsys, "census", str(fixtures_dir / "lorenz.tmpl"), "--max-period", "3", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == ",".join(CSV_FIELDS)
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["orbit_word"] for r in rows] == ["x", "y", "x.y", "x.x.y", "x.y.y"]
        assert err.strip() == "orbits=5 maxF=0 N=18 PASS"

    def test_trefoil_row(self, capsys):
        _, out, _ = run(capsys, "census", "preset:lorenz", "--max-period", "5")
        (row,) = [r for r in csv.DictReader(io.StringIO(out)) if r["orbit_word"] == "x.x.y.x.y"]
        assert (row["genus"], row["factor_count"], row["strands"], row["crossings"]) == ("1", "1", "5", "6")
        assert row["alexander"] == "t^-1 - 1 + t"

    def test_annulus(self, capsys, fixtures_dir):
        code, out, err = run(capsys, "census", str(fixtures_dir / "annulus.tmpl"), "--max-period", "10")
        assert code == 0 and len(out.splitlines()) == 2
        assert err.strip() == "orbits=1 maxF=0 N=2 PASS"

    def test_jsonl_mirrors_csv(self, capsys):
        _, out_csv, _ = run(capsys, "census", "preset:two-branch", "--max-period", "5")
        _, out_json, _ = run(capsys, "census", "preset:two-branch", "--max-period", "5", "--format", "jsonl")
        rows = [json.loads(line) for line in out_json.splitlines()]
        assert all(list(r) == list(CSV_FIELDS) for r in rows)
        assert all(isinstance(r["genus"], int) and isinstance(r["braid"], str) for r in rows)
        assert [{k: str(v) for k, v in r.items()} for r in rows] == list(csv.DictReader(io.StringIO(out_csv)))

    def test_byte_identical_across_jobs(self, capsys):
        outs = {run(capsys, "census", "preset:twisted-lorenz", "--max-period", "9", "--jobs", str(j))[1] for j in (1, 2, 4)}
        assert len(outs) == 1

    def test_bad_period(self, capsys):
        assert run(capsys, "census", "preset:lorenz", "--max-period", "0")[0] == 2

    def test_bad_format(self, capsys):
        assert run(capsys, "census", "preset:lorenz", "--max-period", "2", "--format", "xml")[0] == 2


class TestVerify:
    def test_lorenz_expectation(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "verify", str(fixtures_dir / "lorenz.tmpl"), "--max-period", "9", "--expect-max-f", "1")
        assert code == 0 and "PASS" in err

    def test_twisted(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "verify", str(fixtures_dir / "twisted.tmpl"), "--max-period", "8")
        assert code == 0 and "N=18 PASS" in err

    def test_expectation_violated(self, capsys):
        code, _, err = run(capsys, "verify", "preset:three-band", "--max-period", "7", "--expect-max-f", "1")
        assert code == 6 and "expectation failed: maxF=2" in err

    def test_zero_period(self, capsys, fixtures_dir):
        assert run(capsys, "verify", str(fixtures_dir / "lorenz.tmpl"), "--max-period", "0")[0] == 2

    def test_invariant_failure_exit(self, capsys, monkeypatch):
        from posknots import cli
        from posknots.errors import InvariantError

        def boom(*a, **k):
            raise InvariantError("forced")

        monkeypatch.setattr(cli, "census", boom)
        assert run(capsys, "verify", "preset:lorenz", "--max-period", "3")[0] == 4
        assert run(capsys, "census", "preset:lorenz", "--max-period", "3")[0] == 4

    def test_bound_failure_exit(self, capsys, monkeypatch):
        from posknots import checks

        monkeypatch.setattr(checks, "template_stats", lambda t: type("S", (), {"N": 0})())
        code, _, err = run(capsys, "census", "preset:lorenz", "--max-period", "5")
        assert code == 5 and "FAIL" in err


def test_usage_error(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["--help"]) == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "posknots", "bound", "preset:annulus"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "J=0 S=0 B=1 b1=1 N=2"
