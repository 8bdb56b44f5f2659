import pytest

from ksalg.algebra import AlgebraContext, gen_f, multiply
from ksalg.istates import IState
from ksalg.quiver import (
    EdgeLabel,
    Path,
    canonical_path,
    default_family,
    edges_from,
    export_dot,
    normalize,
    path_counts,
    relation_elements,
    verify_presentation,
)
from ksalg.textforms import element_text, parse_path, path_text


def test_edges_from_example():
    ctx = AlgebraContext.make(2, 1, [1])
    got = [(str(e), y.text()) for e, y in edges_from(ctx, IState(2, (1,)))]
    assert got == [
        ("L1", "{0}"),
        ("R2", "{2}"),
        ("U1", "{1}"),
        ("U2", "{1}"),
        ("C1", "{1}"),
    ]


def test_edges_respect_truncation():
    ctx = AlgebraContext.make(2, 1, flavor="br")
    got = [str(e) for e, _ in edges_from(ctx, IState(2, (1,)))]
    assert "L1" not in got and "R2" in got


def test_path_validation_and_text():
    ctx = AlgebraContext.make(2, 1)
    p = Path(IState(2, (0,)), (EdgeLabel("R", 1), EdgeLabel("R", 2)))
    assert [v.text() for v in p.vertices(ctx)] == ["{0}", "{1}", "{2}"]
    assert path_text(p) == "{0}:R1,R2"
    assert parse_path(ctx, "{0}:R1,R2") == p
    bad = Path(IState(2, (0,)), (EdgeLabel("L", 1),))
    with pytest.raises(ValueError):
        bad.vertices(ctx)


def test_path_counts():
    ctx = AlgebraContext.make(2, 1)
    p = Path(IState(2, (0,)), (EdgeLabel("R", 1), EdgeLabel("L", 1), EdgeLabel("U", 2)))
    r, l = path_counts(ctx, p)
    assert r == (1, 0) and l == (1, 0)


def test_normalize_examples():
    ctx = AlgebraContext.make(1, 1)
    p = Path(IState(1, (0,)), (EdgeLabel("R", 1), EdgeLabel("L", 1)))
    assert element_text(normalize(ctx, p)) == "U1^1*f[{0},{0}]"
    ctx = AlgebraContext.make(2, 1)
    p = Path(IState(2, (0,)), (EdgeLabel("R", 1), EdgeLabel("R", 2)))
    assert normalize(ctx, p).is_zero()


def test_canonical_path_examples():
    ctx = AlgebraContext.make(2, 1)
    p = canonical_path(ctx, IState(2, (0,)), IState(2, (2,)))
    assert path_text(p) == "{0}:R1,R2"
    ctx = AlgebraContext.make(3, 2)
    p = canonical_path(ctx, IState.parse("{0,3}", 3), IState.parse("{1,2}", 3))
    kinds = [e.kind for e in p.edges]
    assert set(kinds) <= {"R", "L"}
    assert p.end(ctx) == IState.parse("{1,2}", 3)
    # F(canonical path) equals the pure generator for every not-far pair
    for x in ctx.istates():
        for y in ctx.istates():
            f = gen_f(ctx, x, y)
            if f.is_zero():
                continue
            assert normalize(ctx, canonical_path(ctx, x, y)) == f


def test_canonical_path_r_before_l():
    ctx = AlgebraContext.make(3, 2)
    p = canonical_path(ctx, IState.parse("{0,3}", 3), IState.parse("{1,2}", 3))
    kinds = [e.kind for e in p.edges]
    seen_l = False
    for k in kinds:
        if k == "L":
            seen_l = True
        else:
            assert not seen_l


def test_relation_families_nested():
    ctx = AlgebraContext.make(2, 1, [1])
    base = relation_elements(ctx, "base")
    quo = relation_elements(ctx, "quotient")
    ori = relation_elements(ctx, "oriented")
    assert len(base) <= len(quo) <= len(ori)
    assert default_family(ctx) == "oriented"
    assert default_family(AlgebraContext.make(2, 1, flavor="bprime")) == "truncated"
    # every relation normalizes to the same element on both sides
    for group in ori:
        imgs = {element_text(normalize(ctx, p)) for p in group}
        assert len(imgs) == 1


def test_verify_presentation_contexts():
    for ctx in [
        AlgebraContext.make(2, 1, [1, 2]),
        AlgebraContext.make(3, 2, [1, 3]),
        AlgebraContext.make(3, 2, [2], flavor="br"),
        AlgebraContext.make(3, 1, [2], flavor="bl"),
        AlgebraContext.make(3, 2, flavor="bprime"),
    ]:
        rep = verify_presentation(ctx)
        assert rep["ok"], rep["failures"]


def test_export_dot():
    dot = export_dot(AlgebraContext.make(1, 1))
    assert dot.startswith("digraph")
    assert '"{0}"' in dot and "R1" in dot
