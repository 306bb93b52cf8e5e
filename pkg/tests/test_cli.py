import io
import json

import pytest

from braidlab.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue().strip()


def test_braid_eq_example():
    assert call("braid", "eq", "s1 s2 s1", "s2 s1 s2", "--n", "3") == (0, "true", "")
    assert call("braid", "eq", "s1 s2", "s2 s1", "--n", "3")[1] == "false"


def test_kohno_dim_example():
    assert call("kohno", "dim", "--k", "4", "--deg", "2")[:2] == (0, "4")


def test_braid_act():
    code, out, _ = call("braid", "act", "A[1,3]", "x2", "--n", "3")
    assert out == "x3^-1 x1^-1 x3 x1 x2 x1^-1 x3^-1 x1 x3"


def test_reports_are_json():
    code, out, _ = call("braid", "verify-relations", "--n", "4")
    data = json.loads(out)
    assert code == 0 and data["failures"] == [] and data["instances_checked"] > 0


@pytest.mark.parametrize("argv,expected", [
    (("kn", "embed", "x1^-1 x2^-1 x1 x2", "--n", "2"), "1 + X1X2 - X2X1"),
    (("kn", "rank", "--n", "3", "--t", "3"), "2"),
    (("simp", "theta", "x1", "--n", "2"), "A[1,3] A[2,3]"),
    (("simp", "face", "x1 x2", "--family", "FS1", "--n", "2", "--t", "2"), "x1"),
    (("simp", "cycle", "x1^-1 x2^-1 x1 x2", "--n", "2"), "true"),
    (("lie", "bracket", "x1", "x2", "--n", "2"), "[x1,x2]"),
    (("kohno", "normalize", "[B12,B13+B23]", "--k", "3"), "0"),
    (("theta", "graded", "[x1,x2]", "--n", "2"), "-[B[1,3],B[2,3]]"),
])
def test_commands(argv, expected):
    assert call(*argv)[:2] == (0, expected)


def test_global_flags_either_side():
    # expressions starting with "-" go after "--"
    a = call("--mod", "2", "kohno", "normalize", "--k", "3", "--", "-[B13,B23]")
    b = call("kohno", "normalize", "--k", "3", "--mod", "2", "--", "-[B13,B23]")
    assert a == b == (0, "[B[1,3],B[2,3]]", "")


def test_json_output():
    code, out, _ = call("kohno", "normalize", "[B13,B23]", "--k", "3", "--json")
    data = json.loads(out)
    assert data["alphabet"] == [[1, 2], [1, 3], [2, 3]]
    assert data["terms"] == [{"lyndon": [1, 2], "coeff": 1}]


def test_hol_mul():
    # (f, x)(g, y) = (f g, g^-1(x) y) with g trivial
    code, out, _ = call("hol", "mul", "s1", "x1", "1", "x2", "--n", "2")
    data = json.loads(out)
    assert code == 0 and data["element"] == "x1 x2"
    assert data["automorphism"] == ["x2", "x2^-1 x1 x2"]


def test_project():
    code, out, _ = call("simp", "project", "A[1,3]", "--n", "2")
    assert code == 0 and "chain" in json.loads(out)


def test_exit_codes():
    assert call("nonsense")[0] == 2
    assert call("braid", "eq", "s7", "s1", "--n", "3")[0] == 2
    assert call("simp", "verify", "--family", "AP", "--max-degree", "9")[0] == 3
    assert call("theta", "verify", "--n", "9", "--max-degree", "2", "--budget", "smoke")[0] == 3
    assert call("appendix", "check")[0] == 1
    assert call("simp", "verify", "--family", "FS1", "--max-degree", "3", "--samples", "3")[0] == 0
    assert call("theta", "verify", "--n", "3", "--max-degree", "3", "--mod", "5")[0] == 0


def test_verify_all_smoke(tmp_path):
    out = tmp_path / "report.json"
    code, _, _ = call("verify", "all", "--budget", "smoke", "--out", str(out))
    data = json.loads(out.read_text())
    names = [s["name"] for s in data["suites"]]
    assert "appendix" in names and "injectivity" in names
    failed = [f for s in data["suites"] for f in s["failures"]]
    # the only failing record is the third appendix value
    assert [f["check"] for f in failed] == ["item 3 modulo decomposables"]
    assert code == 1
    assert data["config"]["budget"]["name"] == "smoke"


def test_verify_all_without_appendix_is_clean():
    code, out, _ = call("verify", "all", "--budget", "smoke", "--only", "words,braid,kohno,admissible")
    assert code == 0 and json.loads(out)["failures"] == 0


def test_verify_is_deterministic():
    a = call("verify", "all", "--budget", "smoke", "--seed", "7", "--only", "words,moore,reduced")
    b = call("verify", "all", "--budget", "smoke", "--seed", "7", "--only", "words,moore,reduced")
    strip = lambda s: [{k: v for k, v in x.items() if k != "seconds"} for x in json.loads(s)["suites"]]  # noqa: E731
    assert strip(a[1]) == strip(b[1])
