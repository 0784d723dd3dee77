import json
import re

import pytest
from click.testing import CliRunner

from planar_cayley.cli import main


@pytest.fixture()
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args), catch_exceptions=False)

    return invoke


class TestBuild:
    def test_dot(self, run):
        r = run("build", "--entry", "Aoi", "--params", "n=3,m=2", "--format", "dot")
        assert r.exit_code == 0
        assert len(re.findall(r"^\s+\d+( \[.*\])?;$", r.output, re.MULTILINE)) == 6

    def test_deterministic(self, run, tmp_path):
        outs = []
        for i in range(2):
            path = tmp_path / f"g{i}.json"
            assert run("build", "--entry", "AIIcii", "--radius", "4", "--out", str(path)).exit_code == 0
            outs.append(path.read_bytes())
        assert outs[0] == outs[1]

    def test_presentation_input(self, run):
        r = run("build", "--presentation", "<a,b | b^2, a^3, (ab)^2>", "--format", "graphml")
        assert r.exit_code == 0 and 'key="d' in r.output

    def test_two_sources(self, run):
        assert run("build", "--entry", "Aoi", "--presentation", "<a | a^3>").exit_code == 2

    def test_no_source(self, run):
        assert run("build").exit_code == 2

    def test_domain_error(self, run):
        r = run("build", "--entry", "Aoi", "--params", "n=2,m=2")
        assert r.exit_code == 2 and "n >= 3" in r.output

    def test_budget(self, run):
        assert run("build", "--presentation", "<a,b | b^2, a^3>", "--radius", "8", "--budget", "50").exit_code == 2

    def test_parse_error(self, run):
        assert run("build", "--presentation", "<a,b | b^2, a b,").exit_code == 2


class TestVerify:
    def test_monster(self, run):
        r = run("verify", "--entry", "AIIciii", "--pattern", "(dcbcdcbcbc)^2", "--radius", "5")
        assert r.exit_code == 0
        assert "kappa >=3" in r.output and "faces closed=0" in r.output

    def test_json_report_file(self, run, tmp_path):
        path = tmp_path / "rep.json"
        r = run("verify", "--entry", "Aoi", "--out", str(path))
        assert r.exit_code == 0
        rep = json.loads(path.read_text())
        assert rep["passed"] and rep["cycle_space_ok"]["rank"] == 4

    def test_json_stdout(self, run):
        r = run("verify", "--entry", "Aziv", "--format", "json")
        assert r.exit_code == 0 and json.loads(r.output)["euler_ok"]["passed"]

    def test_exit_code_tracks_checks(self, run):
        # two vertices joined by a triple edge: connectivity 1 against a header of 2
        r = run("verify", "--entry", "Aix", "--params", "n=1", "--format", "json")
        rep = json.loads(r.output)
        assert r.exit_code == (0 if rep["passed"] else 1) == 1

    def test_presentation_only(self, run):
        assert run("verify", "--presentation", "<a,b | b^2, a^3, (ab)^2>").exit_code == 0


class TestClassify:
    def test_known(self, run):
        r = run("classify", "<a,b | b^2, a^3, (ab)^2>")
        assert r.exit_code == 0 and r.output.strip() == "Aoi n=3 m=2"

    def test_unknown(self, run):
        r = run("classify", "<a,b | a^2, b^2>")
        assert r.exit_code == 1 and "unknown" in r.output

    def test_json(self, run):
        r = run("classify", "--format", "json", "<a,b | b^2, a^3, (ab)^2>")
        assert json.loads(r.output)["params"] == {"m": 2, "n": 3}

    def test_parse_error(self, run):
        assert run("classify", "<a,b | b^2, x>").exit_code == 2


class TestPatternsAndCatalog:
    def test_enumerate(self, run):
        r = run("enumerate-patterns", "--max-len", "8")
        assert "bcdcbcdc\tregular" in r.output.splitlines()

    def test_enumerate_filters(self, run):
        # every non-crossing pattern up to length 12 is regular
        everything = run("enumerate-patterns", "--max-len", "12").output
        assert run("enumerate-patterns", "--max-len", "12", "--regular-only").output == everything
        assert run("enumerate-patterns", "--max-len", "12", "--non-regular-only").output == ""
        assert run("enumerate-patterns", "--regular-only", "--non-regular-only").exit_code == 2

    def test_list(self, run):
        assert len(run("catalog", "list").output.splitlines()) == 37
        assert len(run("catalog", "list", "--all").output.splitlines()) > 37

    def test_show(self, run):
        data = json.loads(run("catalog", "show", "AIId2i").output)
        assert data["expected"]["kappa"] == 3 and data["coincidences"]

    def test_show_unknown(self, run):
        r = run("catalog", "show", "nope")
        assert r.exit_code == 2
