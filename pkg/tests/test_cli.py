import io
import json
import subprocess
import sys

import pytest

from horadam import identities
from horadam.cli import main
from horadam.numeric import parse_scalar


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestTerm:
    def test_pell(self):
        assert run("term", "--preset", "pell", "--n", "5") == (0, "29\n", "")

    def test_explicit_params(self):
        code, out, _ = run("term", "--a", "0", "--b", "1", "--p", "1", "--q", "-2", "--n", "-3")
        assert code == 0 and parse_scalar(out.strip()) == parse_scalar("3/8")

    def test_gaussian(self):
        code, out, _ = run("term", "--preset", "custom(1+1i,2,1+1i,-1i)", "--n", "2")
        # p*b - q*a = (1+i)*2 + i*(1+i) = 1+3i
        assert code == 0 and out.strip() == "1+3i"

    @pytest.mark.parametrize("argv", [
        ("term", "--preset", "pell"),
        ("term", "--preset", "nope", "--n", "1"),
        ("term", "--a", "1", "--b", "2", "--p", "1", "--n", "1"),
        ("term", "--preset", "pell", "--a", "1", "--n", "1"),
        ("term", "--a", "1", "--b", "2", "--p", "0.5", "--q", "1", "--n", "1"),
        ("term", "--a", "1", "--b", "2", "--p", "0", "--q", "1", "--n", "1"),
        ("term", "--preset", "pell", "--n", "11", "--max-index", "10"),
        ("bogus",),
        (),
    ])
    def test_usage_errors(self, argv, capsys):
        code, out, _ = run(*argv)
        assert code == 2 and out == ""


class TestCheck:
    def test_pass(self):
        assert run("check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3", "--r", "2")[:2] == \
            (0, "PASS lhs=rhs=6\n")

    def test_skip(self):
        code, out, _ = run("check", "--id", "thm-xvb2v42", "--preset", "fibonacci", "--r", "1", "--m", "0", "--k", "0")
        assert (code, out) == (0, "SKIP precondition w_{r-1}!=0\n")

    def test_violation_exit_code(self):
        code, out, _ = run("check", "--id", "kernel-eq-8-printed", "--preset", "jacobsthal", "--n", "1")
        assert code == 1 and out.startswith("VIOLATED lhs=-1/2 rhs=-2")

    def test_rational_output_round_trips(self):
        code, out, _ = run("check", "--id", "thm-yng8u8b-u5k6v3w", "--a", "1/2", "--b", "3", "--p", "5/2",
                           "--q", "2/3", "--m", "2", "--r", "3", "--k", "2")
        assert code == 0
        parse_scalar(out.strip().split("=")[-1])

    def test_unused_index_rejected(self):
        code, _, err = run("check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3", "--r", "2", "--k", "1")
        assert code == 2 and "--k" in err

    def test_missing_index(self):
        code, _, err = run("check", "--id", "kernel-eq-11", "--preset", "fibonacci", "--m", "3")
        assert code == 2 and "--r" in err

    def test_negative_k(self):
        assert run("check", "--id", "lemma-2.1", "--preset", "pell", "--m", "1", "--r", "1", "--k", "-1")[0] == 2

    def test_unknown_id(self):
        code, _, err = run("check", "--id", "eq-zzz", "--preset", "pell")
        assert code == 2 and "eq-zzz" in err

    def test_every_listed_id_is_accepted(self):
        _, listing, _ = run("identities")
        for line in listing.splitlines():
            ident = identities.get(line.split()[0])
            args = ["check", "--id", ident.id, "--preset", "fibonacci"]
            for name in ident.indices:
                args += [f"--{name}", "2"]
            code, out, _ = run(*args)
            assert out.split()[0] in {"PASS", "SKIP", "VIOLATED"}
            assert code == (1 if out.startswith("VIOLATED") else 0)


class TestIdentities:
    def test_listing(self):
        code, out, _ = run("identities")
        lines = out.splitlines()
        assert code == 0 and len(lines) == len(identities.registry())
        eq12 = next(line for line in lines if line.startswith("kernel-eq-12 "))
        assert "e=pab-qa^2-b^2" in eq12
        assert "requires=" in eq12 and "indices=m,n,r" in eq12


class TestVerify:
    def test_grid_file_and_report(self, tmp_path):
        grid = tmp_path / "grid.cfg"
        grid.write_text("params = fibonacci, custom(1,2,3,-1)\nm = -2..3\nn = 0..2\nr = 1..3\nk = 0..3\n"
                        "identities = kernel-eq-10, thm-binomial-f9x35z3, kernel-eq-9-printed\n")
        out_file = tmp_path / "report.json"
        code, out, _ = run("verify", "--grid", str(grid), "--out", str(out_file), "--witness-limit", "2")
        assert code == 0
        doc = json.loads(out_file.read_text())
        by_id = {e["identity"]: e for e in doc["identities"]}
        assert by_id["kernel-eq-10"]["violation"] == 0
        assert by_id["kernel-eq-9-printed"]["quarantined"]
        assert len(by_id["kernel-eq-9-printed"]["witnesses"]) == 2
        assert "quarantined" in out

    def test_clearing_quarantine_fails_the_run(self, tmp_path):
        grid = tmp_path / "grid.cfg"
        grid.write_text("params = jacobsthal\nn = 1..3\nidentities = kernel-eq-8-printed\n")
        assert run("verify", "--grid", str(grid), "--quarantine", "none")[0] == 1

    def test_extra_quarantine(self, tmp_path):
        grid = tmp_path / "grid.cfg"
        grid.write_text("params = jacobsthal\nn = 1..3\nidentities = kernel-eq-8-printed\nquarantine = none\n")
        assert run("verify", "--grid", str(grid))[0] == 1
        assert run("verify", "--grid", str(grid), "--quarantine", "kernel-eq-8-printed")[0] == 0

    def test_bad_grid(self, tmp_path):
        grid = tmp_path / "grid.cfg"
        grid.write_text("m = 5..1\n")
        assert run("verify", "--grid", str(grid))[0] == 2
        assert run("verify", "--grid", str(tmp_path / "missing.cfg"))[0] == 2


class TestBench:
    def test_bench(self):
        code, out, _ = run("bench", "--id", "thm-binomial-f9x35z3", "--preset", "fibonacci", "--k", "0,100", "--r", "2")
        assert code == 0 and out.count("yes") == 2

    def test_bench_errors(self):
        assert run("bench", "--id", "thm-binomial-f9x35z3", "--preset", "fibonacci", "--k", "10", "--n", "1")[0] == 2
        assert run("bench", "--id", "thm-binomial-f9x35z3", "--preset", "fibonacci", "--k", "ten")[0] == 2
        assert run("bench", "--id", "kernel-eq-10", "--preset", "fibonacci", "--k", "3")[0] == 2
        assert run("bench", "--id", "thm-binomial-f9x35z3", "--preset", "fibonacci", "--k", "3", "--r", "0")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "horadam", "term", "--preset", "lucas", "--n", "-2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
