import json
import os
import subprocess

import pytest

import sol3

CLI = os.environ.get("SOL3_CLI")


def test_analyze_c6a():
    doc = sol3.analyze("mapping-torus", 1, 2, 2, 5, verify=True)
    assert doc["schema"] == "sol3/1"
    assert doc["case"]["label"] == "C6a"
    assert doc["oracle"]["all_agree"]
    assert all(v["verdict"] == "agree" for v in doc["oracle"]["verdicts"])
    bu = {e["phi"]: e["index"] for e in doc["bu"]["entries"]}
    assert bu["rho"] == 1
    assert bu["sigma+psi"] == 2
    assert bu["sigma"] == 3


def test_labels_and_invariants():
    assert sol3.case_label("mapping-torus", 2, 1, 1, 1) == "C1"
    assert sol3.case_label("union", 1, 2, 1, 3) == "Ub-2mod4"
    assert sol3.abelianization("mapping-torus", 0, 1, -1, 6) == "Z + Z/4"
    assert sol3.is_valid("union", 1, 1, 1, 2)
    assert not sol3.is_valid("mapping-torus", 1, 0, 0, 1)
    assert dict(sol3.bu_indices("union", 1, 1, 1, 2)) == {"U": 2, "V": 2, "U+V": 2}


def test_invalid_input_raises():
    with pytest.raises(sol3.Sol3Error, match="not a Sol matrix"):
        sol3.analyze("mapping-torus", 1, 0, 0, 1)
    with pytest.raises(ValueError):
        sol3.double_cover_factorization(3, 0, 0, 3)


def test_monodromy_and_covers():
    assert sol3.induced_monodromy(1, 1, 1, 2) == (3, 4, 2, 3)
    f = sol3.double_cover_factorization(3, 2, 4, 3)
    assert (f["m1"], f["n1"], f["m2"], f["n2"]) == (1, 1, 2, 1)
    assert sol3.induced_monodromy(*f["union"]) == (3, 2, 4, 3)


def test_smith_and_fixtures():
    assert sol3.smith_diagonal([[2, 2], [2, 2]]) == [2]
    assert sol3.smith_diagonal([[0, -1], [1, 5]]) == [1, 1]
    assert all(passed for _, passed, _ in sol3.fixtures())


@pytest.mark.skipif(CLI is None, reason="SOL3_CLI not set")
class TestCli:
    def run(self, *args):
        return subprocess.run([CLI, *args], capture_output=True, text=True)

    def test_analyze_json(self):
        r = self.run("analyze", "mapping-torus", "1", "2", "2", "5", "--verify", "--format", "json")
        assert r.returncode == 0
        doc = json.loads(r.stdout)
        assert doc["case"]["label"] == "C6a"
        assert list(doc) == sorted(doc)
        assert self.run("analyze", "mapping-torus", "1", "2", "2", "5", "--verify", "--format", "json").stdout == r.stdout

    def test_negative_entries(self):
        r = self.run("analyze", "mapping-torus", "0", "1", "-1", "6", "--format", "csv")
        assert r.returncode == 0
        assert r.stdout.splitlines()[-1].startswith("0,1,-1,6,mapping-torus,1,6,-4,1,C3,")

    def test_not_sol(self):
        r = self.run("analyze", "mapping-torus", "1", "0", "0", "1")
        assert r.returncode == 2
        assert "not a Sol matrix" in r.stderr

    def test_bad_arguments(self):
        assert self.run("analyze", "mapping-torus", "1", "2").returncode == 2
        assert self.run("analyze", "lens", "1", "2", "2", "5").returncode == 2

    def test_verify_alias(self):
        r = self.run("verify", "union", "1", "1", "1", "2", "--format", "json")
        assert r.returncode == 0
        doc = json.loads(r.stdout)
        assert doc["case"]["label"] == "Ub-odd"
        assert {e["index"] for e in doc["bu"]["entries"]} == {2}

    def test_enumerate(self):
        r = self.run("enumerate", "--bound", "3", "--family", "mapping-torus")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0] == "# sol3/1"
        assert lines[1] == "a,b,c,d,family,epsilon,tau,delta1,delta2,case,beta,bu,oracle"
        rows = [l.split(",") for l in lines[2:] if not l.startswith("#")]
        assert rows and all(row[9] for row in rows)
        keys = [tuple(int(x) for x in row[:4]) for row in rows]
        assert keys == sorted(keys)

    def test_enumerate_verify(self):
        r = self.run("enumerate", "--bound", "5", "--family", "union", "--verify")
        assert r.returncode == 0
        assert "# disagreements 0" in r.stdout
        for row in r.stdout.splitlines()[2:]:
            if not row.startswith("#"):
                assert row.endswith(",agree")

    def test_enumerate_union_bound_one(self):
        r = self.run("enumerate", "--bound", "1", "--family", "union")
        rows = [l.split(",") for l in r.stdout.splitlines()[2:] if not l.startswith("#")]
        for a, b, c, d in (map(int, row[:4]) for row in rows):
            assert a * b * c * d != 0 and abs(a * d - b * c) == 1

    def test_fixtures(self):
        r = self.run("fixtures")
        assert r.returncode == 0
        assert r.stdout.count("PASS") == 4
