import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import PROBLEMS
from fischer_cauchy import catalog, io
from fischer_cauchy.cli import main
from fischer_cauchy.polynomials import GradedSeries, HomPoly
from strategies import hompolys


@given(hompolys())
def test_poly_round_trip(f):
    assert io.decode_poly(io.encode_poly(f), f.n, degree=f.degree) == f


@settings(deadline=None, max_examples=10)
@given(hompolys(n=2, degree=2))
def test_problem_round_trip(f):
    prob = catalog.laplace_plus_one(4)
    prob.rhs = GradedSeries(2, 4, {0: HomPoly.constant(2, 1), 2: f})
    back = io.decode_problem(io.encode_problem(prob))
    assert back.rhs == prob.rhs and back.divisor == prob.divisor
    assert back.operator.principal == prob.operator.principal


@pytest.mark.parametrize(
    "mutate, where",
    [
        (lambda d: d.pop("divisor"), "<root>"),
        (lambda d: d.update(extra=1), "<root>"),
        (lambda d: d.update(n=0), "n"),
        (lambda d: d["rhs"][0].update(degree=-1), "rhs/0/degree"),
        (lambda d: d["divisor"][0]["coeff"].update(re=[1]), "divisor/0/coeff/re"),
    ],
)
def test_schema_rejections_name_the_key(mutate, where):
    doc = io.encode_problem(catalog.laplace_plus_one())
    mutate(doc)
    with pytest.raises(io.InputError, match=f"'{where}'"):
        io.decode_problem(doc)


def test_semantic_rejections():
    doc = io.encode_problem(catalog.laplace_plus_one())
    doc["divisor"][0]["exps"] = [1, 0, 0]
    with pytest.raises(io.InputError, match="divisor/0/exps"):
        io.decode_problem(doc)
    doc = io.encode_problem(catalog.laplace_plus_one())
    doc["divisor"][0]["coeff"]["re"] = [1, 0]
    with pytest.raises(io.InputError, match="zero denominator"):
        io.decode_problem(doc)
    doc = io.encode_problem(catalog.laplace_plus_one())
    doc["divisor"].append({"exps": [1, 0], "coeff": {"re": [1, 1]}})
    with pytest.raises(io.InputError, match="not homogeneous"):
        io.decode_problem(doc)


def test_report_rendering():
    assert io.rational_str(Fraction(-3, 4)) == "-3/4"
    assert io.report_float(float("inf")) is None
    assert io.digest({"b": 1, "a": 2}) == io.digest({"a": 2, "b": 1})


def run(args, tmp_path, name="out.json"):
    out = tmp_path / name
    code = main([*args, "--out", str(out)]) if args[0] != "identities" else main(args)
    return code, (json.loads(out.read_text()) if out.exists() else None), out


def test_cli_solve_laplace_plus_one(tmp_path):
    code, rep, _ = run(["solve", str(PROBLEMS / "laplace_plus_one.json")], tmp_path)
    assert code == 0 and rep["residual_ok"]
    parts = {p["degree"]: p["polynomial"] for p in rep["solution"]}
    assert parts[0] == [{"exps": [0, 0], "coeff": {"re": "1/4", "im": "0/1"}}]
    assert {t["coeff"]["re"] for t in parts[2]} == {"-1/64"}


def test_cli_singular_product_exits_2(tmp_path):
    code, rep, _ = run(["solve", str(PROBLEMS / "singular_product.json")], tmp_path)
    assert code == 2 and rep["singular_degree"] == 0 and rep["status"] == "singular"
    code, rep, _ = run(["wellposed", str(PROBLEMS / "singular_product.json")], tmp_path)
    assert code == 2 and rep["singular_degrees"][0] == 0


def test_cli_zero_rhs(tmp_path):
    code, rep, _ = run(["solve", str(PROBLEMS / "zero_rhs.json")], tmp_path)
    assert code == 0 and rep["solution"] == []


def test_cli_report_is_deterministic(tmp_path):
    _, _, a = run(["solve", str(PROBLEMS / "quartic_problem.json"), "--max-degree", "6"], tmp_path, "a.json")
    _, _, b = run(["solve", str(PROBLEMS / "quartic_problem.json"), "--max-degree", "6"], tmp_path, "b.json")
    assert a.read_bytes() == b.read_bytes()


def test_cli_max_degree_override(tmp_path):
    code, rep, _ = run(["solve", str(PROBLEMS / "wave.json"), "--max-degree", "4"], tmp_path)
    assert code == 0 and rep["max_degree"] == 4
    assert max(p["degree"] for p in rep["solution"]) == 4


def test_cli_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert main(["solve", str(bad)]) == 1
    assert main(["solve", str(tmp_path / "missing.json")]) == 1
    bad.write_text(json.dumps({"n": 2}))
    assert main(["solve", str(bad)]) == 1
    assert "error:" in capsys.readouterr().err


def test_cli_ellipticity(tmp_path):
    code, rep, _ = run(["ellipticity", str(PROBLEMS / "light_cone.json")], tmp_path)
    assert code == 0 and rep["verdict"] == "elliptic"
    doc = json.loads((PROBLEMS / "light_cone.json").read_text())
    doc.pop("imaginary_axes")
    path = tmp_path / "cone.json"
    path.write_text(json.dumps(doc))
    code, rep, _ = run(["ellipticity", str(path)], tmp_path)
    assert code == 2 and rep["witness"] is not None


def test_cli_ellipticity_bad_transform(tmp_path):
    doc = json.loads((PROBLEMS / "xi_example.json").read_text())
    doc["A"] = io.encode_matrix([[2, 0], [0, 1]])
    path = tmp_path / "xi.json"
    path.write_text(json.dumps(doc))
    assert main(["ellipticity", str(path)]) == 1


def test_cli_survey_and_identities(tmp_path, capsys):
    code, rep, _ = run(["survey", str(PROBLEMS / "norm4_divisor.json"), "--m-max", "3", "--samples", "3"], tmp_path)
    assert code == 0 and rep["elliptic"] == "elliptic" and len(rep["lower_bounds"]) == 4
    assert main(["identities", "--grid", "small"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 6 and "FAIL" not in out


def test_cli_xi_example_is_elliptic(tmp_path):
    code, rep, _ = run(["ellipticity", str(PROBLEMS / "xi_example.json")], tmp_path)
    assert code == 0 and rep["verdict"] == "elliptic"
    assert rep["transformed_text"] == "(1)*x1^4 + (1)*x2^4"
    assert rep["real_on_reals"] is True


def test_cli_wellposed_quartic_through_16(tmp_path):
    code, rep, _ = run(["wellposed", str(PROBLEMS / "quartic_problem.json")], tmp_path)
    assert code == 0 and rep["well_posed"] and len(rep["per_degree"]) == 17


def test_cli_survey_norm4_ratios_at_least_one(tmp_path):
    args = ["survey", str(PROBLEMS / "norm4_divisor.json"), "--m-max", "6", "--samples", "4", "--seed", "3"]
    code, rep, first = run(args, tmp_path, "s1.json")
    assert code == 0
    assert all(r["operator_min_ratio"] >= 1 - 1e-9 and r["min_sampled_ratio"] >= 1 - 1e-9 for r in rep["lower_bounds"])
    _, _, second = run(args, tmp_path, "s2.json")
    assert first.read_bytes() == second.read_bytes()
    assert max(rep["harmonic_ratios"]) <= 2 * rep["harmonic_ratios"][5]


def test_cli_product_divisor_survey_warns(tmp_path, caplog):
    code, rep, _ = run(["survey", str(PROBLEMS / "product_divisor.json"), "--m-max", "2", "--samples", "2"], tmp_path)
    assert code == 0 and rep["elliptic"] == "not_elliptic"
    assert "not certified elliptic" in caplog.text
