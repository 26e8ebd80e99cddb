import csv
import io
import json
import os
import subprocess
import sys

import pytest

from sl2affine.cli import FORMULA_ALIASES, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestDims:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "dims", "--k0", "1", "--k1", "0", "--depth", "2")
        assert code == 0
        assert out.splitlines()[0].split()[:2] == ["d", "w"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "dims", "--k0", "1", "--k1", "1", "--depth", "2", "--format", "csv")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert list(rows[0]) == ["k0", "k1", "d", "w", "dim_M", "rank_M1", "dim_L", "count_conditions", "match"]
        assert all(r["match"] == "True" for r in rows)

    def test_json_trivial_module(self, capsys):
        code, out, _ = run(capsys, "dims", "--k0", "0", "--k1", "0", "--depth", "3", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert [(r["d"], r["w"]) for r in rows if r["dim_L"]] == [(0, 0)]

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "t.json"
        assert run(capsys, "dims", "--k0", "1", "--k1", "0", "--depth", "1", "--format", "json",
                   "--output", str(path))[0] == 0
        assert json.loads(path.read_text())


class TestVerify:
    def test_leading_terms(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "leading-terms", "--k", "1")
        recs = [json.loads(line) for line in out.splitlines()]
        assert code == 0 and recs
        assert all(set(r) >= {"suite", "check", "params", "pass"} for r in recs)

    def test_relations_small(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "relations", "--k0", "1", "--depth", "1")
        assert code == 0 and out

    def test_generalized_needs_zero_k1(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "virasoro", "--module", "generalized",
                           "--k0", "1", "--k1", "1", "--depth", "1")
        assert code == 2 and "k1" in err

    def test_failure_exit_code(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "embeddings", "--k", "2")
        recs = [json.loads(line) for line in out.splitlines()]
        bad = [r for r in recs if not r["pass"]]
        assert code == 1
        assert bad and all(r["check"] == "unique-family" for r in bad)

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "nope"])
        assert exc.value.code == 2


class TestQSeries:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "qseries", "--formula", "no-multiples", "--n", "2", "--truncate", "5")
        assert code == 0
        assert out.strip() == "1 + q + q^2 + 2*q^3 + 2*q^4 + 3*q^5 + ..."

    def test_alias_and_json(self, capsys):
        _, out, _ = run(capsys, "qseries", "--formula", "no-multiples", "--n", "3", "--format", "json",
                        "--truncate", "8")
        for alias, name in FORMULA_ALIASES.items():
            if name == "no-multiples":
                _, out2, _ = run(capsys, "qseries", "--formula", alias, "--n", "3", "--format", "json",
                                 "--truncate", "8")
                assert json.loads(out)["coefficients"] == json.loads(out2)["coefficients"]
        assert json.loads(out)["N"] == 8

    def test_series(self, capsys):
        _, a, _ = run(capsys, "qseries", "--formula", "P", "--s0", "1", "--s1", "2", "--truncate", "10")
        _, b, _ = run(capsys, "qseries", "--formula", "denominator", "--s0", "1", "--s1", "2", "--truncate", "10")
        assert a == b
        code, c, _ = run(capsys, "qseries", "--formula", "gf", "--k0", "1", "--k1", "1", "--s0", "1", "--s1", "2",
                         "--truncate", "6")
        _, d, _ = run(capsys, "qseries", "--formula", "character", "--k0", "1", "--k1", "1", "--s0", "1",
                      "--s1", "2", "--truncate", "6")
        assert code == 0 and c == d

    def test_missing_parameter(self, capsys):
        code, _, err = run(capsys, "qseries", "--formula", "principal", "--truncate", "5")
        assert code == 2 and "--k0" in err
        code, _, err = run(capsys, "qseries", "--formula", "Q", "--m0", "1")
        assert code == 2 and "--two-m1" in err

    def test_truncation_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("SL2AFFINE_TRUNCATE", "4")
        _, out, _ = run(capsys, "qseries", "--formula", "no-multiples", "--n", "2", "--format", "json")
        assert json.loads(out)["N"] == 4

    def test_bad_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["qseries", "--formula", "no-multiples", "--truncate", "0"])
        assert exc.value.code == 2


class TestMisc:
    def test_enumerate(self, capsys):
        code, out, err = run(capsys, "enumerate", "--k0", "1", "--k1", "0", "--depth", "2", "--weight", "0")
        assert code == 0
        assert out.splitlines() == ["y(-1)x(-1)", "h(-2)"]
        assert err.strip() == "2 partitions"

    def test_lt(self, capsys):
        assert run(capsys, "lt", "--k", "1", "--m", "-2", "--n", "-3")[1].strip() == "y(-2)y(-1)"
        assert run(capsys, "lt", "--k", "1", "--m", "-2", "--n", "-3", "--computed")[1].strip() == "y(-2)y(-1)"
        assert run(capsys, "lt", "--k", "1", "--m", "3", "--n", "-3")[0] == 2

    def test_embeddings(self, capsys):
        code, out, _ = run(capsys, "embeddings", "--k", "1", "--pi", "x(-3)x(-2)x(-1)")
        rep = json.loads(out)
        assert code == 0
        assert [e["rho"] for e in rep["embeddings"]] == ["x(-3)x(-2)", "x(-2)x(-1)"]
        assert rep["pair_classes"][0]["tag"] == "Adjacent"

    def test_bad_partition(self, capsys):
        code, _, err = run(capsys, "embeddings", "--k", "1", "--pi", "z(1)")
        assert code == 2 and err

    def test_module_entry_point(self):
        env = dict(os.environ, SL2AFFINE_TRUNCATE="3")
        res = subprocess.run([sys.executable, "-m", "sl2affine", "qseries", "--formula", "no-multiples", "--n", "2"],
                             capture_output=True, text=True, env=env)
        assert res.returncode == 0
        assert res.stdout.strip() == "1 + q + q^2 + 2*q^3 + ..."
        res = subprocess.run([sys.executable, "-m", "sl2affine"], capture_output=True, text=True)
        assert res.returncode == 2
