"""
Command line: subcommands, exit codes and rendering
"""

import json

import pytest

from kflat import main
from src.cli import build_parser, render, run


def test_groebner_basis_command():
    report = run(["gb", "--vars", "x,y", "--order", "lex", "--ideal", "x^2 + y^2 - 1, x - y"])
    assert report.exit_code == 0
    assert report.data["basis"] == ["x - y", "y^2 - 1/2"]
    assert report.data["order"] == "lex"


def test_global_flags_work_before_the_subcommand():
    report = run(["--vars", "x,y", "--field", "Fp:5", "gb", "--ideal", "x^2 + y^2 - 1, x - y"])
    assert report.exit_code == 0
    assert set(report.data["basis"]) == {"x + 4*y", "y^2 + 2"}
    assert report.data["order"] == "grevlex"


def test_membership_exit_codes():
    yes = run(["member", "--vars", "x,y", "--poly", "x^3 - x*y", "--ideal", "x^2 - y, x*y - 1"])
    no = run(["member", "--vars", "x,y", "--poly", "x", "--ideal", "x^2 - y, x*y - 1"])
    assert (yes.exit_code, yes.status) == (0, "ok")
    assert (no.exit_code, no.status) == (1, "no")


def test_quotient_and_saturation():
    quotient = run(["quotient", "--vars", "x,y", "--ideal", "x^3, y^2", "--by-ideal", "x, y"])
    assert sorted(quotient.data["basis"]) == sorted(["x^3", "x^2*y", "y^2"])
    saturated = run(["saturate", "--vars", "x,y", "--ideal", "x^2, x*y"])
    assert saturated.data["basis"] == ["x"]
    assert run(["quotient", "--vars", "x,y", "--ideal", "x"]).exit_code == 2


def test_frobenius_power_in_char_3():
    report = run(["frob-power", "--field", "Fp:3", "--vars", "x,y", "--ideal", "x, y", "--m", "4"])
    assert set(report.data["generators"]) == {"x^4", "x^3*y", "x*y^3", "y^4"}
    refused = run(["frob-power", "--field", "Fp:3", "--vars", "x,y", "--ideal", "x, y", "--m", "4", "--literal-field"])
    assert refused.exit_code == 2
    assert refused.data["error_type"] == "field_too_small"


def test_pure_part_and_torsion():
    assert run(["torsion", "--vars", "u,v", "--ideal", "v^2, v*u^3"]).data["torsion_length"] == 3
    pure = run(["pure", "--vars", "u,v", "--ideal", "v^2, v*u^3"])
    assert pure.data["basis"] == ["v"]
    assert pure.data["flagged"] is False


def test_cartier_answers_and_undecided():
    no = run(["cartier", "--vars", "u,v", "--f", "v", "--g", "1 + u", "--y", "u", "--r", "1"])
    assert no.exit_code == 1
    undecided = run(["cartier", "--vars", "u,v", "--f", "v^2 - u^3", "--g", "u^3*v", "--y", "u", "--r", "3"])
    assert (undecided.exit_code, undecided.status) == (2, "undecided")


def test_dsupp_commands():
    report = run(["dsupp", "--vars", "t", "--mods", "t^2, t + 1"])
    assert report.exit_code == 0
    assert report.data["char_poly"] == "v^3 + v^2"
    polar = run(["dsupp", "--vars", "w", "--laurent", "u", "--matrix", "u^-1, 0; 0, u"])
    assert polar.data["is_cartier"] is False
    clash = run(["dsupp", "--vars", "v", "--mods", "v^2"])
    assert clash.exit_code == 2


def test_chow_commands():
    axes = run(["chow-axes", "--n", "3"])
    assert len(axes.data["generators"]) == 6
    assert "x1*x2*x3" not in axes.data["generators"]
    pair = run(["chow-pair", "--vars", "x,y,z", "--f", "x*y"])
    assert len(pair.data["generators"]) == 4
    hull = run(["chow-hull", "--vars", "x,y", "--component", "2: x", "--component", "1: y"])
    assert hull.data["basis"] == ["x^2*y"]
    sample = run(["chow-sample", "--axes", "3", "--trials", "200", "--seed", "3", "--compare"])
    assert sample.data["stabilized"] is True
    assert sample.data["agrees"] is True


def test_plane_and_monomial_checks():
    plane = run(["check-plane", "--data", "v^3 - u^2; 0; u^-1*v"])
    assert plane.exit_code == 0
    assert plane.data == {"flat": False, "globalizes": "no", "cflat": True}
    monomial = run(["check-monomial", "--a", "2", "--c", "3", "--phi", "t^-1"])
    assert monomial.exit_code == 0
    assert monomial.data["nonglobal_dim"] == 1
    assert run(["check-monomial", "--a", "2", "--c", "3", "--phi", "t^-2"]).exit_code == 1
    assert run(["check-plane"]).exit_code == 2


def test_cn_checks():
    report = run(["check-cn", "--data", "n = 3; 1 2: x2^-1; 2 1: x1^-1", "--cross-check", "--draws", "3", "--torsion"])
    assert report.exit_code == 0
    assert report.data["kflat"] is True
    assert report.data["flat"] is False
    assert report.data["chow_vanishing"] is True
    assert report.data["projection_consistent"] is True
    assert report.data["central_fiber_torsion"] == 1
    refuted = run(["check-cn", "--data", "n = 3; 1 2: x2^-1", "--cross-check"])
    assert refuted.exit_code == 1
    assert refuted.data["projection_consistent"] is False


def test_cn_def_file(tmp_path):
    data = tmp_path / "c4.txt"
    data.write_text("n = 4\n1 2: x2^-2\n2 1: x1^-2\n", encoding="utf-8")
    report = run(["check-cn", "--def", str(data)])
    assert report.exit_code == 1
    assert report.data["chow_vanishing"] is True


def test_cn_smoothing_command():
    report = run(["cn-smooth", "--p", "1,2,3", "--moebius", "--samples", "12"])
    assert report.exit_code == 0
    assert report.data["moebius_translation"] == {"1": "-1", "2": "-1/2", "3": "-1/3"}
    assert report.data["span"]["dimension"] == 6
    assert run(["cn-smooth", "--p", "0,1", "--moebius"]).exit_code == 2
    assert run(["cn-smooth", "--p", "1,a"]).exit_code == 2


def test_subset_lemma_and_semigroup():
    assert run(["subset-lemma", "--n", "5"]).data["mismatches"] == []
    assert run(["subset-lemma", "--w", "1,1,1"]).exit_code == 1
    assert run(["subset-lemma", "--w", "1,1,1,1"]).data["subset"] == [1, 2]
    semigroup = run(["semigroup", "--a", "3", "--c", "5", "--m", "7"])
    assert semigroup.exit_code == 0
    assert semigroup.data["gaps"] == [1, 2, 4, 7]
    assert semigroup.data["member"] is False
    zero = run(["semigroup", "--a", "3", "--c", "5", "--include-zero"])
    assert zero.exit_code == 1
    assert zero.data["counterexample"] == ["a", 0]


@pytest.mark.parametrize(
    "argv",
    [
        ["chow-sample", "--axes", "3", "--trials", "60", "--seed", "3"],
        ["check-cn", "--data", "n = 3; 1 2: x2^-1; 2 1: x1^-2", "--cross-check", "--seed", "11"],
        ["pure", "--vars", "u,v", "--ideal", "v^2, v*u^3", "--seed", "5"],
    ],
)
def test_same_seed_gives_identical_output(argv):
    for as_json in (False, True):
        assert render(run(argv), as_json) == render(run(argv), as_json)


@pytest.mark.parametrize(
    "argv, error_type",
    [
        (["gb", "--vars", "x,y", "--ideal", "x +"], "parse_error"),
        (["gb", "--vars", "x,y", "--ideal", "x*z"], "unknown_variable"),
        (["gb", "--field", "Fp:8", "--ideal", "x"], "precondition"),
        (["gb"], "usage"),
        (["nonsense"], "usage"),
        (["semigroup", "--a", "2", "--c", "4"], "precondition"),
        (["chow-pair", "--field", "Fp:5", "--vars", "x,y", "--f", "x"], "characteristic"),
    ],
)
def test_errors_exit_with_2(argv, error_type):
    report = run(argv)
    assert report.exit_code == 2
    assert report.status == "error"
    assert report.data["error_type"] == error_type
    assert report.lines[0].startswith("error: ")


def test_json_rendering():
    report = run(["semigroup", "--a", "2", "--c", "3"])
    payload = json.loads(render(report, as_json=True))
    assert payload["command"] == "semigroup"
    assert payload["exit_code"] == 0
    assert payload["data"]["frobenius"] == 1
    assert render(report, as_json=False).startswith("Frobenius number: 1")


def test_main_prints_and_returns_the_exit_code(capsys):
    assert main(["semigroup", "--a", "3", "--c", "5"]) == 0
    assert "gaps: [1, 2, 4, 7]" in capsys.readouterr().out
    assert main(["gb", "--vars", "x", "--ideal", "x +"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["--json", "member", "--vars", "x", "--poly", "x", "--ideal", "x^2"]) == 1
    assert json.loads(capsys.readouterr().out)["status"] == "no"


def test_every_command_has_a_parser():
    parser = build_parser()
    help_text = parser.format_help()
    for name in ("gb", "frob-power", "chow-sample", "check-cn", "cn-smooth", "semigroup"):
        assert name in help_text
