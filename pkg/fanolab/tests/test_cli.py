import io
import json

import pytest

from fanolab.app.cli.documents import parse_polygon
from fanolab.app.cli.errors import EXIT_INVALID, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION
from fanolab.app.core.lattice import are_isomorphic, validate_polygon
from fanolab.app.main import run_command
from fanolab.tests.samples import HEXAGON, HEXAGON_SEQUENCE


def _run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch) -> None:
    for name in ("FANOLAB_R_MAX_DEFAULT", "FANOLAB_R_MAX_CAP", "FANOLAB_JOBS", "NO_COLOR"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.json"
    path.write_text(json.dumps({"name": "hexagon", "vertices": HEXAGON}))
    return str(path)


class TestPredicate:
    def test_true_with_branch(self) -> None:
        code, out, _ = _run("predicate", "--k", "4", "--r", "5", "--s", "2")
        assert code == EXIT_OK
        assert out == "exists: true; branch: k=4, s^2+1 ≡ 0 (mod 5)\n"

    def test_false(self) -> None:
        code, out, _ = _run("predicate", "--k", "5", "--r", "7", "--s", "2")
        assert code == EXIT_OK
        assert out == "exists: false\n"

    def test_note_when_the_congruence_disagrees(self) -> None:
        _, out, _ = _run("predicate", "--k", "4", "--r", "10", "--s", "3")
        assert out.splitlines() == ["exists: false", "note: congruence criterion gives true"]

    def test_json(self) -> None:
        _, out, _ = _run("predicate", "--k", "6", "--r", "3", "--s", "1", "--format", "json")
        data = json.loads(out)
        assert data["exists"] is True
        assert data["branch"] == "k=6, r=3, s=1"

    def test_invalid_parameters(self) -> None:
        code, out, err = _run("predicate", "--k", "4", "--r", "6", "--s", "2")
        assert code == EXIT_INVALID
        assert out == ""
        assert err.startswith("error: ")


class TestContent:
    def test_table(self, hexagon_file) -> None:
        code, out, _ = _run("content", hexagon_file)
        assert code == EXIT_OK
        assert out.splitlines()[0] == "SC = (0, {6 x 1/3(1,1)}); 3-reflexive"

    def test_json_round_trip(self, hexagon_file) -> None:
        _, out, _ = _run("content", hexagon_file, "--format", "json")
        doc = parse_polygon(out)
        assert doc.name == "hexagon"
        assert are_isomorphic(validate_polygon(doc.vertices), validate_polygon(HEXAGON))
        assert json.loads(out)["l_reflexive_index"] == 3

    def test_csv(self, hexagon_file) -> None:
        _, out, _ = _run("content", hexagon_file, "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "cone,ray1,ray2,type,class,length,height,n,residual"
        assert len(lines) == 7

    def test_invalid_polygon(self, tmp_path) -> None:
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"vertices": list(reversed(HEXAGON))}))
        code, _, err = _run("content", str(path))
        assert code == EXIT_INVALID
        assert "anticlockwise" in err

    def test_missing_file(self, tmp_path) -> None:
        code, _, err = _run("content", str(tmp_path / "absent.json"))
        assert code == EXIT_INVALID
        assert err.startswith("error: ")


class TestWinding:
    def test_hexagon_sequence(self, tmp_path) -> None:
        path = tmp_path / "seq.json"
        path.write_text(json.dumps({"vectors": HEXAGON_SEQUENCE}))
        code, out, _ = _run("winding", str(path))
        assert code == EXIT_OK
        assert "formula winding:       1" in out
        assert "twelve-point residual: 0" in out

    def test_json(self, tmp_path) -> None:
        path = tmp_path / "seq.json"
        path.write_text(json.dumps({"vectors": [[1, 0], [0, 1]]}))
        _, out, _ = _run("winding", str(path), "--format", "json")
        data = json.loads(out)
        assert data["formula_winding"] == data["geometric_winding"] == 0
        assert data["eps"] == [1, -1]


class TestFamily:
    def test_round_trip(self) -> None:
        code, out, _ = _run("family", "k6f1", "--r", "3", "--s", "1")
        assert code == EXIT_OK
        doc = parse_polygon(out)
        assert validate_polygon(doc.vertices) == validate_polygon(HEXAGON)
        assert len(json.loads(out)["cone_types"]) == 6

    def test_gcd_condition(self) -> None:
        code, _, err = _run("family", "k3f1", "--r", "7", "--s", "1")
        assert code == EXIT_INVALID
        assert "gcd" in err

    def test_unknown_family_is_a_usage_error(self) -> None:
        code, out, err = _run("family", "k9f9", "--r", "7", "--s", "1")
        assert code == EXIT_USAGE
        assert out == ""
        assert "invalid choice" in err


class TestCensus:
    def test_csv(self) -> None:
        code, out, _ = _run("census", "--r-max", "7", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines() == ["r,k,s,count", "3,6,1,1", "5,4,2,2", "7,3,3,1", "7,6,2,1"]

    def test_jobs_do_not_change_the_output(self) -> None:
        _, serial, _ = _run("census", "--r-max", "9", "--format", "json", "--jobs", "1")
        _, parallel, _ = _run("census", "--r-max", "9", "--format", "json", "--jobs", "2")
        assert serial == parallel

    def test_table_lists_discrepancies(self) -> None:
        code, out, _ = _run("census", "--r-max", "10")
        assert code == EXIT_OK
        assert "Disagreements with the published criterion" in out
        assert "no polygons with all determinant-r R-cones for r = 4" in out

    def test_strict_fails_verification(self) -> None:
        code, _, err = _run("census", "--r-max", "10", "--strict")
        assert code == EXIT_VERIFICATION
        assert "published existence criterion" in err

    def test_cap(self) -> None:
        code, _, err = _run("census", "--r-max", "500")
        assert code == EXIT_INVALID
        assert "cap" in err

    def test_default_from_environment(self, monkeypatch) -> None:
        monkeypatch.setenv("FANOLAB_R_MAX_DEFAULT", "5")
        _, out, _ = _run("census", "--format", "json")
        assert json.loads(out)["r_max"] == 5


class TestVerify:
    def test_order_3(self) -> None:
        code, out, _ = _run("verify", "--r", "3")
        assert code == EXIT_OK
        assert "k6f1" in out

    def test_csv(self) -> None:
        _, out, _ = _run("verify", "--r", "5", "--format", "csv")
        assert out.splitlines()[0] == "family,s,k,vertices"


def test_missing_subcommand_is_a_usage_error(capsys) -> None:
    code, _, err = _run()
    assert code == EXIT_USAGE
    assert err.startswith("usage: fanolab")
    assert "fanolab: error:" in err
    assert capsys.readouterr().err == ""


def test_bad_jobs_value_is_a_usage_error() -> None:
    code, _, err = _run("census", "--jobs", "0")
    assert code == EXIT_USAGE
    assert code != EXIT_VERIFICATION
    assert "expected a positive integer" in err
