import json
import shutil

import pytest

from conftest import FIXTURES, REF_CC, REF_RANKS
from mcdm_workbench.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def project_path(ref_project):
    return str(ref_project)


class TestUsage:
    def test_no_subcommand_is_usage_error(self, capsys):
        code, _, _ = invoke(capsys, "--json")
        assert code == 2

    def test_unknown_subcommand(self, capsys):
        code, _, _ = invoke(capsys, "frobnicate")
        assert code == 2

    def test_missing_required_flag(self, capsys):
        code, _, _ = invoke(capsys, "screen")  # --likert required
        assert code == 2

    def test_missing_project_flag(self, capsys):
        code, _, err = invoke(capsys, "rank")
        assert code == 1
        assert err.startswith("error:")

    def test_missing_project_file(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "--project", str(tmp_path / "nope.mcdm.json"),
                              "rank")
        assert code == 1
        assert err.startswith("error:")
        assert err.count("\n") == 1  # single line


class TestNew:
    def test_creates_project(self, capsys, tmp_path):
        path = tmp_path / "p.mcdm.json"
        code, out, _ = invoke(
            capsys, "--project", str(path), "new", "--name", "demo",
            "--criteria", "c1:benefit,c2:cost", "--alternatives", "a1,a2",
            "--experts", "e1:academic")
        assert code == 0
        assert path.exists()
        data = json.loads(path.read_text())
        assert [c["id"] for c in data["criteria"]] == ["c1", "c2"]

    def test_bad_direction_tag(self, capsys, tmp_path):
        code, _, err = invoke(
            capsys, "--project", str(tmp_path / "p.mcdm.json"), "new",
            "--name", "demo", "--criteria", "c1:sideways")
        assert code == 1 and "sideways" in err


class TestScreen:
    def test_all_retained(self, capsys, tmp_path):
        path = str(tmp_path / "s.mcdm.json")
        invoke(capsys, "--project", path, "new", "--name", "s")
        code, out, _ = invoke(
            capsys, "--project", path, "--json",
            "screen", "--likert", str(FIXTURES / "likert_screening.csv"))
        assert code == 0
        data = json.loads(out)
        assert len(data["retained"]) == 10 and data["eliminated"] == []


class TestJudgeAndWeights:
    def test_judge_reports_cr(self, capsys, project_path):
        code, out, _ = invoke(
            capsys, "--project", project_path, "--json",
            "judge", "--file", str(FIXTURES / "panel_judgments.json"))
        assert code == 0
        data = json.loads(out)
        assert sorted(data["recorded"]) == ["e1", "e2", "e3", "e4", "e5"]
        for entry in data["consistency"].values():
            assert entry["cr"] < 0.1

    def test_weights_accepted(self, capsys, project_path):
        code, out, _ = invoke(capsys, "--project", project_path, "--json", "weights")
        assert code == 0
        data = json.loads(out)
        assert data["accepted"] and data["cr"] < 0.1
        crisp = data["weights"]["crisp_weights"]
        assert crisp == pytest.approx([0.343, 0.352, 0.152, 0.095, 0.057], abs=2e-3)

    def test_weights_rejected_exits_1(self, capsys, tmp_path):
        path = tmp_path / "p.mcdm.json"
        invoke(capsys, "--project", str(path), "new", "--name", "x",
               "--criteria", "c1,c2,c3", "--experts", "e1")
        judgments = {"expert": "e1", "judgments": [
            {"a": "c1", "b": "c2", "label": "Extremely important"},
            {"a": "c1", "b": "c3", "label": "Extremely important", "reciprocal": True},
            {"a": "c2", "b": "c3", "label": "Extremely important"},
        ]}
        jfile = tmp_path / "j.json"
        jfile.write_text(json.dumps(judgments))
        invoke(capsys, "--project", str(path), "judge", "--file", str(jfile))
        code, _, err = invoke(capsys, "--project", str(path), "weights")
        assert code == 1
        assert "consistency ratio" in err


class TestRank:
    def test_rounded_ranking_matches_reference(self, capsys, project_path):
        invoke(capsys, "--project", project_path, "weights")
        code, out, _ = invoke(capsys, "--project", project_path,
                              "--round", "2", "--json", "rank")
        assert code == 0
        data = json.loads(out)
        assert data["cc"] == pytest.approx(REF_CC, abs=1e-3)
        assert tuple(data["rank"]) == REF_RANKS

    def test_rank_is_read_only(self, capsys, project_path, tmp_path):
        invoke(capsys, "--project", project_path, "weights")
        before = open(project_path).read()
        code, _, _ = invoke(capsys, "--project", project_path, "--round", "2", "rank")
        assert code == 0
        assert open(project_path).read() == before

    def test_table_output_columns(self, capsys, project_path):
        invoke(capsys, "--project", project_path, "weights")
        code, out, _ = invoke(capsys, "--project", project_path, "--round", "2", "rank")
        assert code == 0
        header = out.splitlines()[0].split()
        assert header == ["alternative", "d+", "d-", "cc", "rank"]
        assert "0.639" in out and "0.628" in out

    def test_rank_without_weights_fails(self, capsys, project_path):
        code, _, err = invoke(capsys, "--project", project_path, "rank")
        assert code == 1 and err.startswith("error:")


class TestSensitivity:
    def _prepared(self, capsys, project_path):
        invoke(capsys, "--project", project_path, "weights")

    def test_requires_some_mode(self, capsys, project_path):
        self._prepared(capsys, project_path)
        code, _, err = invoke(capsys, "--project", project_path, "sensitivity")
        assert code == 1 and "nothing to do" in err

    def test_deterministic_output(self, capsys, project_path):
        self._prepared(capsys, project_path)
        args = ("--project", project_path, "--json", "sensitivity",
                "--oat=-0.05,0.05", "--mc", "100", "--seed", "42")
        code_a, out_a, _ = invoke(capsys, *args)
        code_b, out_b, _ = invoke(capsys, *args)
        assert code_a == code_b == 0
        assert out_a == out_b  # byte-identical across runs

    def test_oat_table_output(self, capsys, project_path):
        self._prepared(capsys, project_path)
        code, out, _ = invoke(capsys, "--project", project_path,
                              "sensitivity", "--oat=-0.05,0.05")
        assert code == 0
        assert "[oat]" in out and "rank reversals" in out


class TestReport:
    def test_markdown_written_and_read_only(self, capsys, project_path, tmp_path):
        invoke(capsys, "--project", project_path, "weights")
        before = open(project_path).read()
        out_dir = tmp_path / "report"
        code, out, _ = invoke(capsys, "--project", project_path, "--round", "2",
                              "report", "--format", "markdown",
                              "--out", str(out_dir))
        assert code == 0
        assert open(project_path).read() == before
        md = (out_dir / "report.md").read_text()
        assert "0.639" in md

    def test_custom_bands_printed(self, capsys, project_path, tmp_path):
        invoke(capsys, "--project", project_path, "weights")
        code, out, _ = invoke(capsys, "--project", project_path, "--round", "2",
                              "report", "--format", "markdown",
                              "--out", str(tmp_path / "r"), "--bands", "2,2,1")
        assert code == 0
        assert "short=['posture', 'fatigue']" in out


class TestEndToEnd:
    def test_fresh_project_full_pipeline(self, capsys, tmp_path):
        """new -> judge -> import-scores -> weights -> rank reproduces the
        reference ranking from nothing but the fixture inputs."""
        path = str(tmp_path / "hdt.mcdm.json")
        code, _, _ = invoke(
            capsys, "--project", path, "new", "--name", "hdt",
            "--criteria", "safety:benefit,maturity:benefit,cost:cost,data:cost,scalability:benefit",
            "--experts", "e1:academic,e2:academic,e3:academic,e4,e5")
        assert code == 0
        code, _, _ = invoke(capsys, "--project", path, "judge",
                            "--file", str(FIXTURES / "panel_judgments.json"))
        assert code == 0
        code, _, _ = invoke(capsys, "--project", path, "import-scores",
                            "--csv", str(FIXTURES / "decision_scores.csv"))
        assert code == 0
        code, _, _ = invoke(capsys, "--project", path, "weights")
        assert code == 0
        code, out, _ = invoke(capsys, "--project", path, "--round", "2",
                              "--json", "rank")
        assert code == 0
        data = json.loads(out)
        assert data["cc"] == pytest.approx(REF_CC, abs=1e-3)
        assert tuple(data["rank"]) == REF_RANKS
