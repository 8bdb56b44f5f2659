import json

import pytest

from ksalg.algebra import AlgebraContext
from ksalg.cli import main
from ksalg.istates import IState
from ksalg.quiver import canonical_path
from ksalg.textforms import element_text, parse_element, parse_path, path_text


def test_parse_element_errors_report_position():
    ctx = AlgebraContext.make(2, 1, [1])
    for bad in ["U1*", "f[{0},{3}]", "C2*f[{0},{0}]", "U0^1*f[{1},{1}]", "x"]:
        with pytest.raises(ValueError):
            parse_element(ctx, bad)


def test_parse_element_sum_and_duplicates():
    ctx = AlgebraContext.make(2, 1, [1])
    e = parse_element(ctx, "f[{0},{0}]+f[{1},{1}]")
    assert element_text(e) == "f[{0},{0}]+f[{1},{1}]"
    # repeated term cancels over F2
    assert parse_element(ctx, "f[{0},{0}]+f[{0},{0}]").is_zero()


def test_path_text_roundtrip():
    ctx = AlgebraContext.make(3, 2)
    for x in ctx.istates():
        for y in ctx.istates():
            from ksalg.istates import is_far

            if is_far(x, y):
                continue
            p = canonical_path(ctx, x, y)
            assert parse_path(ctx, path_text(p)) == p


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_cli_multiply(capsys):
    code, out = run(capsys, ["multiply", "-n", "1", "-k", "1", "f[{0},{1}]", "f[{1},{0}]"])
    assert code == 0 and out.strip() == "U1^1*f[{0},{0}]"
    code, out = run(capsys, ["multiply", "-n", "2", "-k", "1", "f[{0},{1}]", "f[{1},{2}]"])
    assert code == 0 and out.strip() == "0"


def test_cli_diff_json(capsys):
    code, out = run(
        capsys,
        ["diff", "-n", "2", "-k", "1", "-S", "1,2", "--json", "C1*C2*f[{1},{1}]"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == "ks-alg/1"
    assert payload["differential"] == "C1*U2^1*f[{1},{1}]+C2*U1^1*f[{1},{1}]"


def test_cli_enumerate(capsys):
    code, out = run(capsys, ["enumerate", "-n", "1", "-k", "1", "--cap", "2", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["pieces"]


def test_cli_homology_match(capsys):
    code, out = run(capsys, ["homology", "-n", "2", "-k", "1", "-S", "1", "--cap", "6"])
    assert code == 0
    assert "all pieces match" in out


def test_cli_massey(capsys):
    code, out = run(capsys, ["massey", "-n", "2", "-k", "1", "-S", "1", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["admissible"] is True
    assert payload["product"] == "C1*f[{1},{2}]"


def test_cli_formality_single_and_table(capsys):
    code, out = run(capsys, ["formality", "-n", "2", "-k", "1", "-S", "1", "--json"])
    assert code == 0
    assert json.loads(out)["formal"] is False
    code, out = run(capsys, ["formality", "-n", "1", "--table"])
    assert code == 0 and "formal" in out
    code, out = run(capsys, ["formality", "-n", "2"])
    assert code == 2


def test_cli_verify(capsys):
    code, out = run(capsys, ["verify", "-n", "2", "-k", "1", "-S", "1", "--cap", "8"])
    assert code == 0
    assert "all suites pass" in out


def test_cli_export_dot(capsys):
    code, out = run(capsys, ["export-dot", "-n", "1", "-k", "1"])
    assert code == 0 and out.startswith("digraph")


def test_cli_bad_config(capsys):
    code, _ = run(capsys, ["enumerate", "-n", "2", "-k", "5"])
    assert code == 2
    code, _ = run(capsys, ["multiply", "-n", "2", "-k", "1", "bogus", "f[{1},{1}]"])
    assert code == 2
    code, _ = run(capsys, ["enumerate", "-n", "2", "-k", "1", "--flavor", "b0", "-S", "1"])
    assert code == 2
