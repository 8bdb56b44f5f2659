"""The two involutions of the algebras: the index flip rho and the
transpose o.

rho reverses the line indices (and therefore maps S to n+1-S and swaps the
left/right truncations); o swaps the two I-states of every generator and
reverses multiplication order.
"""

from __future__ import annotations

import random

from .algebra import (
    AlgebraContext,
    BasisElement,
    Element,
    Flavor,
    differential,
    grading,
    graded_pieces_up_to,
    multiply,
)
from .istates import IState
from .quiver import EdgeLabel, Path

__all__ = ["rho_ctx", "rho", "o", "rho_state", "rho_path", "o_path", "symmetry_report"]


def rho_state(x: IState) -> IState:
    return IState(x.n, tuple(sorted(x.n - a for a in x.members)))


def rho_ctx(ctx: AlgebraContext) -> AlgebraContext:
    flavor = {Flavor.BR: Flavor.BL, Flavor.BL: Flavor.BR}.get(ctx.flavor, ctx.flavor)
    return AlgebraContext(ctx.n, ctx.k, frozenset(ctx.n + 1 - i for i in ctx.S), flavor)


def rho(a: Element) -> Element:
    """Line-index reversal, landing in the mirrored context."""
    tctx = rho_ctx(a.ctx)
    out = Element.zero(tctx)
    n = a.ctx.n
    for t in a.terms:
        out = out + Element.from_term(
            tctx,
            rho_state(t.left),
            rho_state(t.right),
            tuple(reversed(t.u_exp)),
            frozenset(n + 1 - i for i in t.c_set),
        )
    return out


def o(a: Element) -> Element:
    """Transpose: swaps the two I-states of every term.  Same context;
    anti-homomorphism: o(ab) = o(b)o(a)."""
    out = Element.zero(a.ctx)
    for t in a.terms:
        out = out + Element.from_term(a.ctx, t.right, t.left, t.u_exp, t.c_set)
    return out


def rho_path(ctx: AlgebraContext, p: Path) -> Path:
    """rho on the quiver: R_i -> L_{n+1-i}, L_i -> R_{n+1-i}, loops flip index."""
    n = ctx.n
    flip = {"R": "L", "L": "R", "U": "U", "C": "C"}
    edges = tuple(EdgeLabel(flip[e.kind], n + 1 - e.line) for e in p.edges)
    return Path(rho_state(p.start), edges)


def o_path(ctx: AlgebraContext, p: Path) -> Path:
    """o on the quiver: reverse the path, swapping R_i with L_i."""
    end = p.end(ctx)
    flip = {"R": "L", "L": "R", "U": "U", "C": "C"}
    edges = tuple(EdgeLabel(flip[e.kind], e.line) for e in reversed(p.edges))
    return Path(end, edges)


def _bounded_elements(ctx: AlgebraContext, cap: int) -> list[Element]:
    out = []
    states = ctx.istates()
    for x in states:
        for y in states:
            for terms in graded_pieces_up_to(ctx, x, y, cap).values():
                out.extend(Element(ctx, [t]) for t in terms)
    return out


def symmetry_report(ctx: AlgebraContext, cap: int = 6, pairs: int = 200, seed: int = 0) -> dict:
    """Checks the involution laws, the (anti)homomorphism laws, the grading
    behavior, and compatibility with the differential and normalization."""
    from .quiver import canonical_path, normalize

    failures: list[str] = []
    elems = _bounded_elements(ctx, cap)
    tctx = rho_ctx(ctx)
    for a in elems:
        if rho(rho(a)) != a:
            failures.append(f"rho^2 != id on {a!r}")
        if o(o(a)) != a:
            failures.append(f"o^2 != id on {a!r}")
        if rho(o(a)) != o(rho(a)):
            failures.append(f"rho o != o rho on {a!r}")
        if rho(differential(a)) != differential(rho(a)):
            failures.append(f"rho incompatible with d on {a!r}")
        if o(differential(a)) != differential(o(a)):
            failures.append(f"o incompatible with d on {a!r}")
        t = a.single_term()
        g = grading(ctx, t)
        for b, bctx in ((rho(a), tctx), (o(a), ctx)):
            if b.is_zero():
                failures.append(f"symmetry killed basis element {a!r}")
                continue
            h = grading(bctx, b.single_term())
            if h.maslov != g.maslov:
                failures.append(f"maslov not preserved on {a!r}")
        if not rho(a).is_zero():
            h = grading(tctx, rho(a).single_term())
            if h.alex2 != tuple(reversed(g.alex2)):
                failures.append(f"rho alex2 not reversed on {a!r}")
            ru = g.unrefined
            # tau_i -> beta_{n+1-i}, beta_i -> tau_{n+1-i}
            expect = []
            for i in range(ctx.n, 0, -1):
                expect.append(ru[2 * (i - 1) + 1])
                expect.append(ru[2 * (i - 1)])
            if h.unrefined != tuple(expect):
                failures.append(f"rho unrefined mismatch on {a!r}")
        if not o(a).is_zero():
            h = grading(ctx, o(a).single_term())
            if h.alex2 != g.alex2:
                failures.append(f"o alex2 changed on {a!r}")
            expect = []
            for i in range(ctx.n):
                expect.append(g.unrefined[2 * i + 1])
                expect.append(g.unrefined[2 * i])
            if h.unrefined != tuple(expect):
                failures.append(f"o unrefined mismatch on {a!r}")
    rng = random.Random(seed)
    if elems:
        for _ in range(pairs):
            a, b = rng.choice(elems), rng.choice(elems)
            if rho(multiply(a, b)) != multiply(rho(a), rho(b)):
                failures.append(f"rho not multiplicative on {a!r}, {b!r}")
            if o(multiply(a, b)) != multiply(o(b), o(a)):
                failures.append(f"o not anti-multiplicative on {a!r}, {b!r}")
    # F intertwines both symmetries on canonical paths
    states = ctx.istates()
    for x in states:
        for y in states:
            p = canonical_path(ctx, x, y)
            if rho(normalize(ctx, p)) != normalize(tctx, rho_path(ctx, p)):
                failures.append(f"rho does not intertwine F on path {p}")
            if o(normalize(ctx, p)) != normalize(ctx, o_path(ctx, p)):
                failures.append(f"o does not intertwine F on path {p}")
    return {"ctx": str(ctx), "ok": not failures, "failures": failures[:20]}
