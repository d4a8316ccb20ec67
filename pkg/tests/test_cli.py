import json

import jsonschema
import pytest

from wmatch import cli
from wmatch.oracle import worker_count
from wmatch.verify import CheckResult, SuiteReport

K33 = "3\n1 1 1\n1 1 1\n1 1 1\n"
PM_FREE = "2\n0 0\n1 1\n"
DIAG2 = "2\n1 0\n0 1\n"
WEIGHTS_2 = "2\n1 2\n3 1\n"
WEIGHTS_3 = "3\n1 2 3\n4 5 6\n7 8 9\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [
        ("k33.graph", K33),
        ("pmfree.graph", PM_FREE),
        ("diag2.graph", DIAG2),
        ("w2.weights", WEIGHTS_2),
        ("w3.weights", WEIGHTS_3),
        ("bad.graph", "2\n1 0 1\n0 1\n"),
    ]:
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--format", "json"])
    payload = json.loads(out) if out else None
    return code, payload, err


SCHEMA = cli.report_schema()


class TestDecide:
    def test_yes_with_certificate(self, capsys, files):
        code, out, _ = run(capsys, ["decide", files["k33.graph"], "--trials", "20"])
        assert code == 0
        assert out.startswith("YES")
        assert "matching:" in out

    def test_no_on_pm_free(self, capsys, files):
        code, out, _ = run(capsys, ["decide", files["pmfree.graph"]])
        assert code == 1
        assert out.startswith("NO")

    def test_malformed_file_exit_2(self, capsys, files):
        code, _, err = run(capsys, ["decide", files["bad.graph"]])
        assert code == 2
        assert "line 2" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, ["decide", "/nonexistent.graph"])
        assert code == 2
        assert "error:" in err

    def test_json_schema(self, capsys, files):
        code, payload, _ = run_json(capsys, ["decide", files["k33.graph"]])
        assert code == 0
        jsonschema.validate(payload, SCHEMA)
        assert payload["result"] == "yes"

    def test_byte_identical_reruns(self, capsys, files):
        argv = ["decide", files["k33.graph"], "--seed", "42", "--format", "json"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2


class TestFind:
    def test_found(self, capsys, files):
        code, payload, _ = run_json(capsys, ["find", files["k33.graph"]])
        assert code == 0
        jsonschema.validate(payload, SCHEMA)
        assert payload["result"] == "found"
        assert len(payload["matching"]) == 3
        weight = sum(
            payload["weights"][i][j] for i, j in payload["matching"]
        )
        assert weight == payload["min_weight"]

    def test_failed_on_pm_free(self, capsys, files):
        code, payload, _ = run_json(capsys, ["find", files["pmfree.graph"]])
        assert code == 1
        jsonschema.validate(payload, SCHEMA)
        assert payload["result"] == "failed"

    def test_text_output_lists_weights(self, capsys, files):
        code, out, _ = run(capsys, ["find", files["diag2.graph"]])
        assert code == 0
        assert "weights:" in out


class TestHungarian:
    def test_2x2_example(self, capsys, files):
        code, payload, _ = run_json(capsys, ["hungarian", files["w2.weights"]])
        assert code == 0
        jsonschema.validate(payload, SCHEMA)
        assert payload["matching_weight"] == 5
        assert payload["cover_cost"] == 5
        assert payload["weight_equals_cost"] is True
        assert payload["cover_valid"] is True

    def test_negative_weight_exit_2(self, capsys, tmp_path):
        p = tmp_path / "neg.weights"
        p.write_text("2\n1 -2\n3 1\n")
        code, _, err = run(capsys, ["hungarian", str(p)])
        assert code == 2
        assert "line 2" in err


class TestMwpm:
    def test_k33(self, capsys, files):
        code, payload, _ = run_json(
            capsys, ["mwpm", files["k33.graph"], files["w3.weights"]]
        )
        assert code == 0
        jsonschema.validate(payload, SCHEMA)
        assert payload["matching_weight"] == 15

    def test_no_pm(self, capsys, files, tmp_path):
        p = tmp_path / "w.weights"
        p.write_text("2\n0 0\n0 0\n")
        code, out, _ = run(capsys, ["mwpm", files["pmfree.graph"], str(p)])
        assert code == 1
        assert "no perfect matching" in out

    def test_dimension_mismatch_exit_2(self, capsys, files):
        code, _, err = run(capsys, ["mwpm", files["k33.graph"], files["w2.weights"]])
        assert code == 2
        assert "does not match" in err


class TestVerify:
    def test_small_suite_passes(self, capsys):
        code, payload, _ = run_json(capsys, ["verify", "iso", "--max-k", "2"])
        assert code == 0
        jsonschema.validate(payload, SCHEMA)
        assert payload["passed"] is True

    def test_budget_exceeded_exit_3(self, capsys):
        code, _, err = run(capsys, ["verify", "sz", "--budget", "100"])
        assert code == 3
        assert "budget" in err

    def test_failing_suite_exit_1(self, capsys, monkeypatch):
        def fake_run_suite(name, **kwargs):
            return SuiteReport(name, [CheckResult("forced failure", False, {})])

        monkeypatch.setattr(cli, "run_suite", fake_run_suite)
        code, out, _ = run(capsys, ["verify", "det"])
        assert code == 1
        assert "FAIL forced failure" in out

    def test_text_lines_per_check(self, capsys):
        code, out, _ = run(capsys, ["verify", "iso", "--max-k", "2"])
        assert code == 0
        assert out.splitlines()[0] == "suite: iso"
        assert any(line.startswith("PASS ") for line in out.splitlines())
        assert out.splitlines()[-1] == "result: PASS"


class TestSeedHandling:
    def test_rejects_bad_seed(self, capsys, files):
        with pytest.raises(SystemExit):
            cli.main(["decide", files["k33.graph"], "--seed", "nope"])
        capsys.readouterr()

    def test_random_seed_accepted(self, capsys, files):
        code, payload, _ = run_json(
            capsys, ["decide", files["k33.graph"], "--seed", "random"]
        )
        assert code == 0
        jsonschema.validate(payload, SCHEMA)

    def test_seed_changes_weights(self, capsys, files):
        _, p1, _ = run_json(capsys, ["find", files["k33.graph"], "--seed", "1"])
        _, p2, _ = run_json(capsys, ["find", files["k33.graph"], "--seed", "2"])
        assert p1["weights"] != p2["weights"]


class TestWorkerCount:
    def test_default_is_one(self, monkeypatch):
        monkeypatch.delenv("WM_THREADS", raising=False)
        assert worker_count() == 1

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("WM_THREADS", "4")
        assert worker_count() == 4

    def test_garbage_falls_back(self, monkeypatch):
        monkeypatch.setenv("WM_THREADS", "many")
        assert worker_count() == 1
