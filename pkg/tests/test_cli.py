"""
Tests for the command-line interface.
"""

import json

import pytest

from normalcut import cli
from normalcut.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_POSITIVE, main


@pytest.fixture
def run(capsys):
    """Run the CLI and return (exit code, stdout)."""

    def _run(*argv):
        code = main([str(a) for a in argv])
        return code, capsys.readouterr().out

    return _run


class TestValidate:
    """Test the validate command."""

    def test_triangulation(self, run, samples_dir):
        code, out = run("validate", samples_dir / "solid_torus.json")
        assert code == EXIT_POSITIVE
        assert out == "ok, 1 tetrahedra, 2 boundary faces\n"

    def test_pd(self, run, samples_dir):
        code, out = run("validate", samples_dir / "pd" / "trefoil.json")
        assert code == EXIT_POSITIVE
        assert out == "ok, 3 crossings\n"

    def test_invalid_triangulation(self, run, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"tets": 1, "gluings": [[0, 1, 0, 1, [0, 1, 2]]]}')
        code, out = run("validate", path, "--json")
        assert code == EXIT_NEGATIVE
        report = json.loads(out)
        assert report["ok"] is False
        assert "self-glued face" in report["message"]

    def test_missing_file(self, run, tmp_path):
        code, out = run("validate", tmp_path / "absent.json")
        assert code == EXIT_ERROR
        assert out.startswith("error: configuration")


class TestAnalyze:
    """Test the analyze command."""

    def test_solid_torus_json(self, run, samples_dir):
        code, out = run("analyze", samples_dir / "solid_torus.json", "--json")
        assert code == EXIT_POSITIVE
        report = json.loads(out)
        assert report["schema_version"] == 1
        assert report["h1"] == "Z"
        assert report["kneser_bound"] == 8
        assert report["boundary"] == [
            {"triangles": 2, "euler": 0, "orientable": True, "torus": True}
        ]

    def test_trefoil_complement(self, run, samples_dir):
        code, out = run("analyze", samples_dir / "trefoil_complement.json", "--json")
        assert code == EXIT_POSITIVE
        report = json.loads(out)
        assert report["h1"] == "Z"
        assert report["kneser_bound"] == 26
        assert report["boundary"] == [
            {"triangles": 2, "euler": 0, "orientable": True, "torus": True}
        ]

    def test_spheres(self, run, samples_dir):
        code, out = run("analyze", samples_dir / "closed_example.json", "--spheres")
        assert code == EXIT_POSITIVE
        assert "boundary: empty" in out
        assert "normal 2-spheres (non-vertex-linking): 3" in out


class TestEnumerate:
    """Test the enumerate command."""

    def test_fundamental(self, run, samples_dir):
        code, out = run("enumerate", samples_dir / "solid_torus.json", "--json")
        assert code == EXIT_POSITIVE
        report = json.loads(out)
        assert report["mode"] == "fundamental"
        assert len(report["solutions"]) == 5
        meridian = [s for s in report["solutions"] if s["vector"] == [1, 0, 0, 1, 1, 0, 0]][0]
        assert meridian["euler"] == 1
        assert meridian["components"] == ["disk"]

    def test_admissible_vertex(self, run, samples_dir):
        code, out = run(
            "enumerate", samples_dir / "solid_torus.json", "--vertex", "--admissible", "--json"
        )
        report = json.loads(out)
        assert report["mode"] == "vertex"
        assert len(report["solutions"]) == 4
        assert all(s["admissible"] for s in report["solutions"])

    def test_limit_exceeded(self, run, samples_dir):
        code, out = run("enumerate", samples_dir / "ball.json", "--box-cap", "100")
        assert code == EXIT_ERROR
        assert "limit exceeded" in out

    def test_json_is_deterministic(self, run, samples_dir):
        first = run("enumerate", samples_dir / "solid_torus.json", "--json")
        second = run("enumerate", samples_dir / "solid_torus.json", "--json")
        assert first == second


class TestUnknot:
    """Test the unknot command."""

    def test_solid_torus(self, run, samples_dir):
        code, out = run("unknot", samples_dir / "solid_torus.json")
        assert code == EXIT_POSITIVE
        assert out == "unknot, essential disk [1, 0, 0, 1, 1, 0, 0]\n"

    def test_not_a_knot_complement(self, run, samples_dir):
        code, out = run("unknot", samples_dir / "ball.json")
        assert code == EXIT_NEGATIVE
        assert out.startswith("error: invalid input")

    def test_write_to_file(self, run, samples_dir, tmp_path):
        target = tmp_path / "verdict.json"
        code, out = run("unknot", samples_dir / "solid_torus.json", "--json", "--out", target)
        assert code == EXIT_POSITIVE
        assert out == ""
        report = json.loads(target.read_text())
        assert report["verdict"] == "unknot"
        assert report["diagnostics"]["essential_disks"] == 1
        assert [p.name for p in tmp_path.iterdir()] == ["verdict.json"]

    def test_dovetail_consistent(self, run, samples_dir):
        code, out = run(
            "unknot", samples_dir / "solid_torus.json", "--pd", samples_dir / "pd" / "unknot.json"
        )
        assert code == EXIT_POSITIVE
        assert out.startswith("unknot\n")

    def test_dovetail_inconsistent(self, run, samples_dir):
        code, out = run(
            "unknot",
            samples_dir / "solid_torus.json",
            "--pd",
            samples_dir / "pd" / "trefoil.json",
            "--n-max",
            "3",
            "--json",
        )
        assert code == EXIT_ERROR
        assert json.loads(out)["verdict"] == "inconsistent"

    def test_two_tetrahedra(self, run, samples_dir):
        code, out = run("unknot", samples_dir / "solid_torus_2.json")
        assert code == EXIT_POSITIVE
        assert out == "unknot, essential disk [1, 0, 0, 1, 1, 0, 0, 2, 2, 0, 0, 0, 0, 1]\n"

    def test_dovetail_keeps_representation_on_limit(self, run, samples_dir):
        """Should report the S_n certificate when the decider hits its cap."""
        code, out = run(
            "unknot",
            samples_dir / "solid_torus.json",
            "--pd",
            samples_dir / "pd" / "trefoil.json",
            "--n-max",
            "3",
            "--box-cap",
            "10",
            "--json",
        )
        assert code == EXIT_NEGATIVE
        report = json.loads(out)
        assert report["verdict"] == "knotted"
        assert report["unknot"] is None
        assert "exceeds cap 10" in report["decider_error"]
        assert report["representation"]["found"] is True
        assert report["representation"]["n"] == 3

    @pytest.mark.slow
    def test_trefoil_complement_with_diagram(self, run, samples_dir):
        """Should report knotted with both the decider verdict and the S_3 certificate."""
        code, out = run(
            "unknot",
            samples_dir / "trefoil_complement.json",
            "--pd",
            samples_dir / "pd" / "trefoil.json",
            "--n-max",
            "3",
            "--box-cap",
            "10000000000",
            "--json",
        )
        assert code == EXIT_NEGATIVE
        report = json.loads(out)
        assert report["verdict"] == "knotted"
        assert report["decider_error"] is None
        assert report["unknot"]["verdict"] == "knotted"
        assert report["unknot"]["certificate"] is None
        assert report["unknot"]["diagnostics"]["essential_disks"] == 0
        assert report["representation"]["found"] is True
        assert report["representation"]["image_order"] == 6

    def test_trefoil_complement_over_default_cap(self, run, samples_dir):
        code, out = run("unknot", samples_dir / "trefoil_complement.json")
        assert code == EXIT_ERROR
        assert "limit exceeded" in out

    def test_failed_write_leaves_no_partial_file(self, run, samples_dir, tmp_path, monkeypatch):
        def refuse(src, dst):
            raise OSError("disk full")

        monkeypatch.setattr(cli.os, "replace", refuse)
        code, _ = run("unknot", samples_dir / "solid_torus.json", "--out", tmp_path / "verdict.txt")
        assert code == EXIT_ERROR
        assert list(tmp_path.iterdir()) == []


class TestVerify:
    """Test re-verification of saved verdicts."""

    @pytest.fixture
    def saved_verdict(self, run, samples_dir, tmp_path):
        target = tmp_path / "verdict.json"
        run("unknot", samples_dir / "solid_torus.json", "--json", "--out", target)
        return target

    def test_verdict_reverifies(self, run, samples_dir, saved_verdict):
        code, out = run("verify", samples_dir / "solid_torus.json", saved_verdict)
        assert code == EXIT_POSITIVE
        assert out == "ok, essential disk re-verified\n"

    def test_other_triangulation(self, run, samples_dir, saved_verdict):
        """Should reject a verdict issued for a different triangulation."""
        code, out = run("verify", samples_dir / "solid_torus_2.json", saved_verdict, "--json")
        assert code == EXIT_NEGATIVE
        report = json.loads(out)
        assert report["ok"] is False
        assert "checksum" in report["message"]

    def test_tampered_certificate(self, run, samples_dir, saved_verdict):
        report = json.loads(saved_verdict.read_text())
        report["certificate"] = [1, 1, 1, 1, 0, 0, 0]
        saved_verdict.write_text(json.dumps(report))
        code, out = run("verify", samples_dir / "solid_torus.json", saved_verdict)
        assert code == EXIT_NEGATIVE
        assert "disk" in out

    @pytest.mark.slow
    def test_knotted_verdict(self, run, samples_dir, tmp_path):
        """A knotted verdict carries no disk, so only the checksum is checked."""
        target = tmp_path / "knotted.json"
        tri = samples_dir / "trefoil_complement.json"
        run("unknot", tri, "--box-cap", "10000000000", "--json", "--out", target)
        code, out = run("verify", tri, target)
        assert code == EXIT_POSITIVE
        assert out == "ok, checksum matches, knotted verdict carries no disk\n"

    def test_not_a_report(self, run, samples_dir):
        code, out = run("verify", samples_dir / "solid_torus.json", samples_dir / "ball.json")
        assert code == EXIT_NEGATIVE
        assert out.startswith("not a verdict report")


class TestCertifyKnotted:
    """Test the certify-knotted command."""

    def test_trefoil(self, run, samples_dir):
        code, out = run("certify-knotted", samples_dir / "pd" / "trefoil.json", "--n-max", "3")
        assert code == EXIT_POSITIVE
        assert out.startswith("knotted: S_3 image of order 6")

    def test_unknot_is_inconclusive(self, run, samples_dir):
        code, out = run("certify-knotted", samples_dir / "pd" / "unknot.json", "--json")
        assert code == EXIT_NEGATIVE
        assert json.loads(out)["found"] is False

    def test_bad_n_max(self, run, samples_dir):
        code, _ = run("certify-knotted", samples_dir / "pd" / "trefoil.json", "--n-max", "2")
        assert code == EXIT_ERROR
