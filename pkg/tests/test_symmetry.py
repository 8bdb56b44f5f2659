import pytest

from ksalg.algebra import AlgebraContext, differential, grading, multiply
from ksalg.istates import IState
from ksalg.quiver import canonical_path
from ksalg.symmetry import o, o_path, rho, rho_ctx, rho_path, rho_state, symmetry_report
from ksalg.textforms import element_text, parse_element, path_text


def test_rho_state_and_ctx():
    assert rho_state(IState.parse("{0,2}", 3)).text() == "{1,3}"
    ctx = AlgebraContext.make(3, 2, [1], flavor="br")
    rc = rho_ctx(ctx)
    assert rc.flavor.value == "bl" and sorted(rc.S) == [3]
    assert rho_ctx(rc) == ctx


def test_rho_on_elements():
    ctx = AlgebraContext.make(3, 2, [1])
    a = parse_element(ctx, "C1*U2^1*f[{0,1},{1,2}]")
    b = rho(a)
    assert element_text(b) == "C3*U2^1*f[{2,3},{1,2}]"
    assert rho(b) == a


def test_o_on_elements():
    ctx = AlgebraContext.make(2, 1, [1])
    a = parse_element(ctx, "f[{0},{1}]")
    assert element_text(o(a)) == "f[{1},{0}]"
    assert o(o(a)) == a


def test_o_antimultiplicative_example():
    ctx = AlgebraContext.make(2, 1)
    a = parse_element(ctx, "f[{0},{1}]")
    b = parse_element(ctx, "f[{1},{1}]")
    assert o(multiply(a, b)) == multiply(o(b), o(a))


def test_rho_multiplicative_example():
    ctx = AlgebraContext.make(2, 1, [1, 2])
    a = parse_element(ctx, "f[{0},{1}]")
    b = parse_element(ctx, "C1*f[{1},{1}]")
    assert rho(multiply(a, b)) == multiply(rho(a), rho(b))


def test_symmetries_commute_with_differential():
    ctx = AlgebraContext.make(2, 1, [1, 2])
    a = parse_element(ctx, "C1*C2*f[{1},{1}]")
    assert rho(differential(a)) == differential(rho(a))
    assert o(differential(a)) == differential(o(a))


def test_grading_transport():
    ctx = AlgebraContext.make(3, 2, [1])
    a = parse_element(ctx, "C1*U2^1*f[{0,1},{1,2}]").single_term()
    g = grading(ctx, a)
    b = rho(parse_element(ctx, "C1*U2^1*f[{0,1},{1,2}]")).single_term()
    gb = grading(rho_ctx(ctx), b)
    assert gb.maslov == g.maslov
    assert gb.alex2 == tuple(reversed(g.alex2))


def test_path_transport():
    ctx = AlgebraContext.make(2, 1)
    p = canonical_path(ctx, IState(2, (0,)), IState(2, (2,)))
    assert path_text(rho_path(ctx, p)) == "{2}:L2,L1"
    q = o_path(ctx, p)
    assert path_text(q) == "{2}:L2,L1"


def test_symmetry_report_contexts():
    for ctx in [
        AlgebraContext.make(2, 1, [1]),
        AlgebraContext.make(3, 2, [1, 3]),
        AlgebraContext.make(3, 2, [2], flavor="br"),
        AlgebraContext.make(3, 2, [2], flavor="bprime"),
    ]:
        rep = symmetry_report(ctx, cap=6, pairs=150, seed=3)
        assert rep["ok"], rep["failures"]
